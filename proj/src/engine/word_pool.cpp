#include "engine/word_pool.hpp"

#include <algorithm>
#include <sstream>

namespace vsrchart::engine {

namespace {

// clang-format off
const char* kWords = R"(
cat dog horse cow sheep goat pig rabbit deer bear wolf fox lion tiger leopard cheetah
panther jaguar elephant rhino hippo giraffe zebra camel llama alpaca donkey mule bison
buffalo moose elk antelope gazelle monkey gorilla baboon lemur sloth otter beaver badger
skunk raccoon squirrel chipmunk mouse rat hamster gerbil hedgehog mole bat whale dolphin
porpoise seal walrus orca shark tuna salmon trout bass cod herring sardine anchovy
mackerel eel octopus squid crab lobster shrimp oyster clam mussel snail slug worm spider
ant bee wasp hornet beetle butterfly moth dragonfly cricket grasshopper locust cicada
firefly ladybug caterpillar eagle hawk falcon owl raven crow magpie sparrow robin finch
wren swallow swift heron crane stork pelican gull tern duck goose swan turkey chicken
rooster hen pigeon dove parrot macaw cockatoo canary peacock penguin ostrich emu kiwi
flamingo toucan woodpecker hummingbird turtle tortoise lizard gecko iguana snake cobra
python viper frog toad newt salamander apple banana orange lemon lime grape cherry peach
pear plum apricot mango papaya guava melon watermelon cantaloupe pineapple coconut fig
date raisin berry strawberry blueberry raspberry blackberry cranberry currant gooseberry
olive avocado tomato potato carrot onion garlic ginger pepper chili radish turnip beet
celery lettuce spinach kale cabbage broccoli cauliflower asparagus artichoke pea bean
lentil chickpea corn wheat barley oat rye rice millet quinoa bread toast bagel muffin
croissant pancake waffle cereal pasta noodle pizza burger sandwich taco burrito soup
stew salad curry sushi dumpling pie cake cookie brownie donut pudding custard yogurt
cheese butter cream milk egg bacon ham sausage steak beef pork lamb veal venison tofu
honey sugar salt vinegar mustard ketchup sauce syrup jam jelly chocolate vanilla
cinnamon nutmeg clove basil oregano thyme rosemary sage mint parsley cilantro dill
fennel saffron coffee tea juice soda cider wine beer whiskey vodka rum gin brandy
cocktail smoothie lemonade Canada Mexico Brazil Argentina Chile Peru Colombia Venezuela
Ecuador Bolivia Uruguay Paraguay France Germany Spain Portugal Italy Greece Austria
Belgium Netherlands Denmark Sweden Norway Finland Iceland Ireland Scotland England Wales
Poland Hungary Romania Bulgaria Croatia Serbia Albania Ukraine Russia Turkey Georgia
Armenia Egypt Morocco Algeria Tunisia Libya Sudan Ethiopia Kenya Tanzania Uganda Ghana
Nigeria Senegal Mali Chad Niger Zambia Zimbabwe Botswana Namibia Angola Mozambique
Madagascar China Japan Korea India Pakistan Bangladesh Nepal Bhutan Myanmar Thailand
Vietnam Laos Cambodia Malaysia Singapore Indonesia Philippines Australia Fiji Samoa
Tonga Israel Jordan Lebanon Syria Iraq Iran Oman Yemen Qatar Kuwait Bahrain Afghanistan
Kazakhstan Uzbekistan Mongolia Taiwan Cuba Jamaica Haiti Panama Honduras Guatemala
Nicaragua Belize London Paris Berlin Madrid Rome Vienna Prague Budapest Warsaw Lisbon
Dublin Amsterdam Brussels Geneva Zurich Munich Hamburg Frankfurt Milan Naples Venice
Florence Barcelona Seville Valencia Athens Istanbul Moscow Kyiv Oslo Stockholm Helsinki
Copenhagen Reykjavik Tokyo Osaka Kyoto Seoul Beijing Shanghai Shenzhen Guangzhou Chengdu
Delhi Mumbai Chennai Kolkata Bangalore Karachi Lahore Dhaka Bangkok Hanoi Jakarta Manila
Sydney Melbourne Brisbane Perth Auckland Wellington Cairo Lagos Nairobi Accra Casablanca
Johannesburg Durban Toronto Montreal Vancouver Ottawa Chicago Boston Seattle Denver
Austin Dallas Houston Phoenix Atlanta Miami Orlando Portland Detroit Cleveland Nashville
Memphis crimson scarlet ruby maroon coral amber gold yellow ochre beige tan brown bronze
copper rust green emerald jade teal cyan azure blue navy cobalt indigo violet purple
magenta pink rose lavender lilac gray silver charcoal black white ivory pearl doctor
nurse surgeon dentist teacher professor student lawyer judge engineer architect builder
carpenter plumber electrician mechanic pilot captain sailor soldier officer detective
farmer gardener chef baker butcher waiter barista cashier clerk manager director analyst
accountant banker trader broker agent designer artist painter sculptor musician singer
dancer actor writer author poet editor journalist reporter photographer librarian
scientist chemist physicist biologist geologist astronomer mathematician programmer
developer technician operator driver courier postman firefighter ranger vet pharmacist
therapist counselor coach trainer athlete referee umpire tailor barber stylist jeweler
locksmith welder miner fisherman shepherd translator interpreter guide wood timber oak
pine maple birch cedar walnut mahogany bamboo steel iron aluminum titanium nickel zinc
tin lead brass pewter stone granite marble slate limestone sandstone quartz crystal
glass ceramic porcelain clay brick concrete cement plaster sand gravel gypsum leather
wool cotton linen silk velvet denim canvas nylon polyester rubber plastic foam paper
cardboard carbon graphite diamond obsidian soccer football basketball baseball tennis
golf hockey rugby volleyball badminton squash swimming diving rowing sailing surfing
skiing snowboarding skating cycling running sprinting marathon triathlon boxing
wrestling judo karate taekwondo fencing archery shooting bowling billiards darts chess
poker climbing hiking camping fishing hunting yoga pilates gymnastics weightlifting
jogging polo lacrosse handball softball racquetball curling biathlon mountain valley
hill cliff canyon gorge ravine plateau plain prairie meadow field forest jungle woodland
grove orchard garden desert dune oasis tundra glacier iceberg volcano crater geyser
river stream brook creek waterfall rapids lake pond lagoon marsh swamp bog estuary delta
bay gulf strait channel fjord coast shore beach island peninsula cape reef ocean sea
tide wave current storm thunder lightning rain drizzle downpour hail sleet snow blizzard
frost ice fog mist cloud wind breeze gale hurricane tornado cyclone drought flood
sunshine rainbow dawn dusk sunset sunrise twilight computer laptop tablet phone server
router modem network internet website browser email password database software hardware
keyboard monitor screen printer scanner camera microphone speaker headphone battery
charger cable adapter processor memory storage disk drive folder file code program
script algorithm function variable array vector loop query index cache buffer packet
signal sensor chip circuit board transistor resistor capacitor antenna satellite radar
laser robot drone engine motor turbine generator pump valve piston gear lever pulley
spring market economy finance budget revenue profit loss income expense salary wage
bonus tax invoice receipt payment credit debit loan mortgage interest dividend stock
share bond fund asset liability equity capital investment savings account balance
transfer deposit withdrawal audit report forecast growth decline inflation recession
merger acquisition startup company corporation enterprise agency firm brand product
service customer client vendor supplier contract deal agreement negotiation meeting
conference seminar workshop project deadline schedule strategy campaign advert sale
discount refund warranty shipment inventory logistics atom molecule electron proton
neutron photon quark particle element compound mixture solution reaction catalyst enzyme
protein acid base gene cell nucleus tissue organ organism bacteria virus fungus species
genus evolution mutation gravity force energy momentum velocity acceleration friction
pressure density volume mass weight temperature heat entropy frequency wavelength
amplitude spectrum orbit planet moon star galaxy nebula comet asteroid meteor universe
cosmos telescope microscope experiment hypothesis theory evidence analysis measurement
observation equation formula theorem proof logic statistics probability average median
variance ratio fraction percent degree radian matrix graph vertex edge node cluster
house home apartment cottage cabin villa mansion castle tower bridge tunnel road street
avenue boulevard lane alley path sidewalk driveway garage attic basement cellar kitchen
bathroom bedroom hallway corridor balcony porch patio terrace roof ceiling floor wall
window door gate fence hedge lawn yard chimney fireplace stove oven fridge freezer sink
faucet shower bathtub toilet mirror shelf cabinet drawer closet wardrobe table desk
chair sofa couch bench stool bed mattress pillow blanket curtain carpet rug lamp candle
clock vase shirt blouse sweater jacket coat vest suit dress skirt trousers pants jeans
shorts sock shoe boot sandal slipper sneaker hat cap helmet scarf glove mitten belt tie
collar cuff button zipper pocket sleeve uniform apron robe pajamas raincoat umbrella
handbag wallet purse backpack bracelet necklace earring watch liberty justice freedom
peace harmony wisdom courage honor glory pride humility patience kindness mercy grace
beauty truth trust faith hope love joy happiness sorrow grief anger fear surprise wonder
curiosity interest passion desire dream vision goal purpose meaning value virtue ethics
moral duty right law rule policy order chaos balance change progress tradition culture
heritage history memory moment instant second minute hour day week month year decade
century millennium season spring summer autumn winter morning noon evening night today
tomorrow yesterday future past present journey voyage adventure quest mission task
challenge problem answer question idea thought concept notion principle method system
process stage phase step level grade rank class group team crowd community society
nation public family friend neighbor stranger guest host leader follower winner loser
hero villain champion legend myth story tale novel poem song melody rhythm tune chord
note verse chorus January February March April May June July August September October
November December Monday Tuesday Wednesday Thursday Friday Saturday Sunday north south
east west center middle total annual monthly weekly daily quarterly airport station
harbor port terminal platform railway subway tram ferry yacht canoe kayak barge
freighter tanker truck lorry van bus coach taxi scooter motorcycle bicycle wagon
carriage sled tractor bulldozer forklift trailer ambulance needle thread scissors hammer
wrench screwdriver pliers drill saw chisel file sandpaper ladder bucket broom mop sponge
brush rake shovel spade hoe axe pickaxe crowbar clamp vise anvil torch lantern
flashlight compass map globe binoculars magnet scale ruler protractor caliper pencil pen
marker crayon chalk eraser notebook journal diary ledger envelope stamp parcel package
label tag sticker ribbon string rope chain wire hook nail screw bolt nut washer hinge
latch lock key school college university academy kindergarten classroom lecture lesson
course exam quiz test homework essay thesis diploma degree certificate scholarship
library museum gallery theater cinema stadium arena gym pool park zoo circus carnival
festival fair parade concert opera ballet orchestra band choir ensemble anchor armor
arrow bow shield sword spear dagger cannon fortress moat drawbridge throne crown scepter
banner flag emblem badge medal trophy prize award kingdom empire republic province
region district county city town village hamlet suburb border frontier territory
continent hemisphere equator pole axis zone sector area surface boundary perimeter
circumference diameter radius width height depth length distance interval span gap
margin offset limit threshold maximum minimum range domain scope extent portion segment
slice piece part whole unit item entry record row column grid block chunk batch set
collection sequence series pattern trend curve slope peak trough baseline benchmark
standard metric measure indicator score rating percentile quartile decile outlier sample
population census survey poll vote ballot election candidate party coalition senate
parliament congress council committee board panel jury tribunal court trial verdict
sentence appeal witness testimony clue mystery riddle puzzle secret cipher beacon alarm
siren whistle horn bell chime echo silence noise sound pitch tone timbre accent dialect
language grammar vocabulary word letter syllable phrase clause paragraph chapter page
cover spine binding head skull brain face forehead eyebrow eyelash eyelid eye pupil nose
nostril cheek jaw chin mouth lip tooth tongue throat neck shoulder arm elbow wrist palm
finger thumb knuckle chest rib lung heart stomach liver kidney spine hip waist leg thigh
knee shin ankle heel toe muscle bone skin vein nerve piano guitar violin viola cello
harp flute clarinet oboe bassoon saxophone trumpet trombone tuba drum cymbal tambourine
xylophone marimba accordion harmonica banjo mandolin ukulele synthesizer bagpipe fiddle
recorder bugle lyre zither sitar tabla bongo gong maraca flower blossom petal stem leaf
root branch twig bark trunk seed sprout bud thorn vine ivy moss fern algae cactus shrub
bush grass reed tulip daisy lily orchid sunflower daffodil carnation peony chrysanthemum
marigold jasmine magnolia azalea begonia dahlia poppy clover dandelion nettle thistle
willow poplar aspen elm ash beech chestnut sycamore spruce fir hemlock juniper cypress
redwood sequoia palm eucalyptus acacia baobab mangrove sapphire topaz opal garnet
amethyst aquamarine turquoise onyx agate jasper malachite peridot zircon beryl citrine
moonstone platinum mercury eclipse solstice equinox aurora zenith horizon meridian
latitude longitude altitude gradient delight bliss glee cheer comfort relief calm
serenity tranquility excitement thrill awe dread worry anxiety stress tension doubt
suspicion envy jealousy greed gratitude sympathy empathy compassion respect admiration
devotion loyalty ambition determination persistence diligence discipline clarity
confidence optimism pessimism arrival departure entrance exit approach retreat ascent
descent expansion contraction increase decrease improvement upgrade repair maintenance
installation removal insertion deletion creation destruction demolition assembly
production consumption distribution delivery pickup export import purchase rental lease
exchange swap conversion transformation rotation reflection projection selection
filtration evaporation condensation absorption emission radiation conduction convection
combustion corrosion erosion sediment anniversary birthday wedding funeral ceremony
ritual celebration holiday vacation trip tour excursion picnic banquet feast buffet
snack appetizer dessert beverage ingredient recipe menu serving flavor aroma fragrance
perfume scent odor fabric garment costume disguise mask makeup lipstick shampoo soap
lotion towel napkin plate bowl cup mug saucer spoon fork knife chopstick tray pitcher
kettle pot pan skillet grill toaster blender mixer whisk grater peeler thermos flask jar
bottle carton crate barrel keg sack pouch bin basket hamper cart trolley lynx puma
ocelot wolverine ferret weasel stoat mink marten possum armadillo anteater tapir okapi
ibex chamois yak gnu wildebeest meerkat mongoose hyena jackal dingo coyote albatross
petrel cormorant ibis spoonbill kingfisher roadrunner quail partridge pheasant grouse
ptarmigan puffin lark nightingale oriole cardinal bluejay chickadee nuthatch starling
mockingbird thrush warbler carp catfish pike perch walleye flounder halibut sole haddock
pollock grouper snapper marlin swordfish barracuda stingray manta guppy goldfish koi
betta minnow alpha beta gamma delta epsilon sigma omega axiom lemma corollary integer
decimal exponent logarithm polynomial derivative integral tangent secant cosine sine
modulus quotient remainder divisor multiple factor prime blacksmith goldsmith innkeeper
merchant peddler apprentice artisan craftsman weaver potter mason roofer glazier paver
surveyor auditor registrar archivist curator janitor custodian concierge bellhop porter
chauffeur valet butler maid nanny tutor mentor intern recruit veteran
)";
// clang-format on

}  // namespace

const std::vector<std::string>& word_pool() {
  static const std::vector<std::string> pool = [] {
    std::vector<std::string> words;
    std::istringstream in(kWords);
    std::string w;
    while (in >> w) {
      words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
  }();
  return pool;
}

}  // namespace vsrchart::engine
