#include "kpvc/tagset.hpp"

#include <stdexcept>

#include "kpvc/utf8.hpp"

namespace kpvc {

bool Tagset::matches(const std::vector<std::string>& prefixes, std::string_view tag) {
  for (const auto& p : prefixes) {
    if (tag.starts_with(p)) return true;
  }
  return false;
}

void Tagset::set(std::string_view key, std::string_view prefixes) {
  if (key == "verbalizer_surface") {
    if (prefixes.empty()) throw std::invalid_argument("empty verbalizer surface");
    verbalizer_surface = std::string(prefixes);
    return;
  }
  std::vector<std::string> list;
  for (auto& p : utf8::split(prefixes, ',')) {
    if (!p.empty()) list.push_back(std::move(p));
  }
  if (list.empty()) throw std::invalid_argument("empty tag list for '" + std::string(key) + "'");

  std::vector<std::string>* target = nullptr;
  if (key == "adposition") target = &adposition;
  else if (key == "stem") target = &stem;
  else if (key == "verbalizer") target = &verbalizer;
  else if (key == "ending") target = &ending;
  else if (key == "tense") target = &tense;
  else if (key == "final_ending") target = &final_ending;
  else if (key == "nominalizer") target = &nominalizer;
  else if (key == "adverb") target = &adverb;
  else if (key == "noun") target = &noun;
  if (target == nullptr) throw std::invalid_argument("unknown tag class '" + std::string(key) + "'");
  *target = std::move(list);
}

}  // namespace kpvc
