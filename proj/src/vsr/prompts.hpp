#pragma once

#include <string>

namespace vsrchart {

// Prompt templates with {width}, {height} and {localizations} placeholders.
// Defaults are compiled in and mirrored as editable text files under
// prompts/; a prompt directory on disk overrides them per file.
struct PromptSet {
  std::string localize;
  std::string verify;
  std::string decode;
};

const PromptSet& default_prompts();

// Loads localize.txt / verify.txt / decode.txt from `dir`, falling back to
// the built-in text for missing files.
PromptSet load_prompts(const std::string& dir);

std::string render_prompt(const std::string& tmpl, int width, int height,
                          const std::string& localizations_json);

}  // namespace vsrchart
