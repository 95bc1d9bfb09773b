#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpvc::hangul {

inline constexpr char32_t kSyllableFirst = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;
inline constexpr int kInitialCount = 19;
inline constexpr int kMedialCount = 21;
inline constexpr int kFinalCount = 28;  // index 0 = no final consonant
inline constexpr int kRieulFinal = 8;

// initial = 초성, medial = 중성, final = 종성
struct SyllableParts {
  int initial = 0;
  int medial = 0;
  int final = 0;

  friend bool operator==(const SyllableParts&, const SyllableParts&) = default;
};

enum class FinalKind { Vowel, Rieul, OtherConsonant, NonHangul };

std::string_view to_string(FinalKind kind);

constexpr bool is_syllable(char32_t cp) { return cp >= kSyllableFirst && cp <= kSyllableLast; }

/// Precomposed syllables only; compatibility jamo (U+3131 block) yield nullopt.
std::optional<SyllableParts> decompose(char32_t syllable);

/// Throws std::out_of_range when an index falls outside its table.
char32_t compose(const SyllableParts& parts);

/// Classifies the last character of `word`. Throws std::invalid_argument on an empty word.
FinalKind final_kind(std::string_view word);

/// Compatibility jamo (ㄱ U+3131 ... ㅎ U+314E) spelling a final index, or nullopt
/// for index 0 and out-of-range values.
std::optional<char32_t> final_jamo(int final_index);

/// Inverse of final_jamo.
std::optional<int> final_index_of(char32_t jamo);

enum class NonHangulPolicy {
  LemmaForm,      // 를, 로
  ConsonantForm,  // 을, 으로
};

struct AllomorphOptions {
  NonHangulPolicy non_hangul = NonHangulPolicy::LemmaForm;
};

/// Postposition lemmas with a known allomorphy rule: 에, 를, 로, 에도, 에게.
const std::vector<std::string>& postposition_lemmas();

bool is_postposition_lemma(std::string_view lemma);

/// All surfaces a lemma can take, lemma form first (를 -> {를, 을}; 에 -> {에}).
/// Throws UnknownPostposition.
std::vector<std::string> allomorphs(std::string_view lemma);

/// Surface of `lemma` after `host`. 를 becomes 을 after any final consonant; 로
/// becomes 으로 after a final consonant other than ㄹ; the 에 family never alternates.
/// Throws UnknownPostposition, and std::invalid_argument for an empty host.
std::string allomorph(std::string_view lemma, std::string_view host,
                      const AllomorphOptions& options = {});

/// Lemma whose allomorph set contains `surface`, if any.
std::optional<std::string> lemma_of(std::string_view surface);

}  // namespace kpvc::hangul
