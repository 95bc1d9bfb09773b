#include "kpvc/hangul.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "kpvc/error.hpp"
#include "kpvc/utf8.hpp"

namespace kpvc::hangul {

namespace {

constexpr int kMedialStride = kFinalCount;                 // 28
constexpr int kInitialStride = kMedialCount * kFinalCount;  // 588

// Compatibility jamo for final indices 1..27.
constexpr std::array<char32_t, kFinalCount> kFinalJamo = {
    0,      0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137, 0x3139, 0x313A,
    0x313B, 0x313C, 0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142, 0x3144, 0x3145,
    0x3146, 0x3147, 0x3148, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
};

struct Alternation {
  std::string_view lemma;
  std::string_view after_consonant;  // empty when the lemma never alternates
  bool rieul_takes_lemma;
};

constexpr std::array<Alternation, 5> kAlternations = {{
    {"에", "", true},
    {"를", "을", false},
    {"로", "으로", true},
    {"에도", "", true},
    {"에게", "", true},
}};

const Alternation* find_alternation(std::string_view lemma) {
  for (const auto& alt : kAlternations) {
    if (alt.lemma == lemma) return &alt;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(FinalKind kind) {
  switch (kind) {
    case FinalKind::Vowel: return "Vowel";
    case FinalKind::Rieul: return "Rieul";
    case FinalKind::OtherConsonant: return "OtherConsonant";
    case FinalKind::NonHangul: return "NonHangul";
  }
  return "?";
}

std::optional<SyllableParts> decompose(char32_t syllable) {
  if (!is_syllable(syllable)) return std::nullopt;
  const int offset = static_cast<int>(syllable - kSyllableFirst);
  return SyllableParts{offset / kInitialStride, (offset % kInitialStride) / kMedialStride,
                       offset % kMedialStride};
}

char32_t compose(const SyllableParts& parts) {
  if (parts.initial < 0 || parts.initial >= kInitialCount) {
    throw std::out_of_range("initial index out of range: " + std::to_string(parts.initial));
  }
  if (parts.medial < 0 || parts.medial >= kMedialCount) {
    throw std::out_of_range("medial index out of range: " + std::to_string(parts.medial));
  }
  if (parts.final < 0 || parts.final >= kFinalCount) {
    throw std::out_of_range("final index out of range: " + std::to_string(parts.final));
  }
  return kSyllableFirst +
         static_cast<char32_t>(parts.initial * kInitialStride + parts.medial * kMedialStride +
                               parts.final);
}

FinalKind final_kind(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("final_kind: empty word");
  const auto parts = decompose(utf8::last_code_point(word));
  if (!parts) return FinalKind::NonHangul;
  if (parts->final == 0) return FinalKind::Vowel;
  if (parts->final == kRieulFinal) return FinalKind::Rieul;
  return FinalKind::OtherConsonant;
}

std::optional<char32_t> final_jamo(int final_index) {
  if (final_index <= 0 || final_index >= kFinalCount) return std::nullopt;
  return kFinalJamo[static_cast<std::size_t>(final_index)];
}

std::optional<int> final_index_of(char32_t jamo) {
  if (jamo == 0) return std::nullopt;
  const auto it = std::find(kFinalJamo.begin(), kFinalJamo.end(), jamo);
  if (it == kFinalJamo.end()) return std::nullopt;
  return static_cast<int>(it - kFinalJamo.begin());
}

const std::vector<std::string>& postposition_lemmas() {
  static const std::vector<std::string> lemmas = [] {
    std::vector<std::string> out;
    for (const auto& alt : kAlternations) out.emplace_back(alt.lemma);
    return out;
  }();
  return lemmas;
}

bool is_postposition_lemma(std::string_view lemma) { return find_alternation(lemma) != nullptr; }

std::vector<std::string> allomorphs(std::string_view lemma) {
  const Alternation* alt = find_alternation(lemma);
  if (alt == nullptr) throw UnknownPostposition(std::string(lemma));
  std::vector<std::string> out{std::string(alt->lemma)};
  if (!alt->after_consonant.empty()) out.emplace_back(alt->after_consonant);
  return out;
}

std::string allomorph(std::string_view lemma, std::string_view host,
                      const AllomorphOptions& options) {
  const Alternation* alt = find_alternation(lemma);
  if (alt == nullptr) throw UnknownPostposition(std::string(lemma));
  if (host.empty()) throw std::invalid_argument("allomorph: empty host");
  if (alt->after_consonant.empty()) return std::string(alt->lemma);

  switch (final_kind(host)) {
    case FinalKind::Vowel:
      return std::string(alt->lemma);
    case FinalKind::Rieul:
      return std::string(alt->rieul_takes_lemma ? alt->lemma : alt->after_consonant);
    case FinalKind::OtherConsonant:
      return std::string(alt->after_consonant);
    case FinalKind::NonHangul:
      break;
  }
  return std::string(options.non_hangul == NonHangulPolicy::LemmaForm ? alt->lemma
                                                                      : alt->after_consonant);
}

std::optional<std::string> lemma_of(std::string_view surface) {
  for (const auto& alt : kAlternations) {
    if (alt.lemma == surface || (!alt.after_consonant.empty() && alt.after_consonant == surface)) {
      return std::string(alt.lemma);
    }
  }
  return std::nullopt;
}

}  // namespace kpvc::hangul
