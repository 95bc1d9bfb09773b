#include <stdexcept>

#include "doctest.h"
#include "kpvc/error.hpp"
#include "kpvc/hangul.hpp"
#include "kpvc/utf8.hpp"
#include "support/oracles.hpp"

namespace h = kpvc::hangul;

TEST_CASE("decompose splits precomposed syllables") {
  CHECK(h::decompose(U'관') == h::SyllableParts{0, 9, 4});
  CHECK(h::decompose(U'게') == h::SyllableParts{0, 5, 0});
  CHECK(h::decompose(U'힣') == h::SyllableParts{18, 20, 27});
  CHECK_FALSE(h::decompose(U'A').has_value());
  CHECK_FALSE(h::decompose(U'ㄱ').has_value());  // compatibility jamo
  CHECK_FALSE(h::decompose(0xABFF).has_value());
  CHECK_FALSE(h::decompose(0xD7A4).has_value());
}

TEST_CASE("compose is the inverse of decompose") {
  CHECK(h::compose({0, 0, 0}) == U'가');
  CHECK(h::compose({0, 9, 4}) == U'관');
  CHECK_THROWS_AS(h::compose({0, 0, 28}), std::out_of_range);
  CHECK_THROWS_AS(h::compose({19, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(h::compose({0, 21, 0}), std::out_of_range);
  CHECK_THROWS_AS(h::compose({-1, 0, 0}), std::out_of_range);
  for (char32_t cp = h::kSyllableFirst; cp <= h::kSyllableLast; ++cp) {
    const auto parts = h::decompose(cp);
    REQUIRE(parts.has_value());
    REQUIRE(h::compose(*parts) == cp);
  }
}

TEST_CASE("final_kind looks at the last character") {
  CHECK(h::final_kind("책") == h::FinalKind::OtherConsonant);
  CHECK(h::final_kind("하늘") == h::FinalKind::Rieul);
  CHECK(h::final_kind("게") == h::FinalKind::Vowel);
  CHECK(h::final_kind("GPU") == h::FinalKind::NonHangul);
  CHECK(h::final_kind("서울2") == h::FinalKind::NonHangul);
  CHECK_THROWS_AS(h::final_kind(""), std::invalid_argument);
}

TEST_CASE("final jamo table") {
  CHECK_FALSE(h::final_jamo(0).has_value());
  CHECK_FALSE(h::final_jamo(28).has_value());
  for (const auto& row : oracle::finals_table()) {
    if (row.index == 0) continue;
    const auto jamo = h::final_jamo(row.index);
    REQUIRE(jamo.has_value());
    CHECK(oracle::utf8_of(*jamo) == row.jamo);
    CHECK(h::final_index_of(*jamo) == row.index);
  }
  CHECK_FALSE(h::final_index_of(U'ㄸ').has_value());  // never a final
}

TEST_CASE("allomorph selection over every final") {
  for (const auto& row : oracle::finals_table()) {
    const std::string host = "하" + oracle::ga_with_final(row.index);
    CAPTURE(row.index);
    CHECK(h::allomorph("를", host) == row.lul);
    CHECK(h::allomorph("로", host) == row.lo);
    CHECK(h::allomorph("에", host) == "에");
    CHECK(h::allomorph("에도", host) == "에도");
    CHECK(h::allomorph("에게", host) == "에게");
  }
  CHECK(h::allomorph("를", "하늘") == "을");
  CHECK(h::allomorph("에", "게") == "에");
  CHECK(h::allomorph("로", "하늘") == "로");
  CHECK(h::allomorph("로", "책") == "으로");
}

TEST_CASE("allomorph after non-Hangul hosts follows the policy") {
  CHECK(h::allomorph("를", "GPU") == "를");
  CHECK(h::allomorph("로", "2024") == "로");
  const h::AllomorphOptions consonant{h::NonHangulPolicy::ConsonantForm};
  CHECK(h::allomorph("를", "GPU", consonant) == "을");
  CHECK(h::allomorph("로", "2024", consonant) == "으로");
  CHECK(h::allomorph("에", "GPU", consonant) == "에");
}

TEST_CASE("allomorph errors") {
  CHECK_THROWS_AS(h::allomorph("가", "책"), kpvc::UnknownPostposition);
  CHECK_THROWS_AS(h::allomorph("를", ""), std::invalid_argument);
  CHECK_THROWS_AS(h::allomorphs("은"), kpvc::UnknownPostposition);
}

TEST_CASE("allomorph sets and lemma lookup") {
  CHECK(h::allomorphs("를") == std::vector<std::string>{"를", "을"});
  CHECK(h::allomorphs("로") == std::vector<std::string>{"로", "으로"});
  CHECK(h::allomorphs("에") == std::vector<std::string>{"에"});
  CHECK(h::lemma_of("을") == "를");
  CHECK(h::lemma_of("으로") == "로");
  CHECK(h::lemma_of("에도") == "에도");
  CHECK_FALSE(h::lemma_of("가").has_value());
  CHECK(h::is_postposition_lemma("에게"));
  CHECK_FALSE(h::is_postposition_lemma("을"));
}

TEST_CASE("utf8 helpers") {
  using namespace kpvc::utf8;
  CHECK(decode("관한") == U"관한");
  CHECK(encode(U"게에") == "게에");
  CHECK(length("게에 관한") == 5);
  CHECK(find_invalid("ok") == std::string::npos);
  CHECK(find_invalid(std::string("a\xff", 2)) == 1);
  CHECK(find_invalid(std::string("\xea\xb4", 2)) == 0);  // truncated
  CHECK_THROWS_AS(decode(std::string("ab\xc0\x80", 4)), kpvc::DecodeError);
  CHECK(last_code_point("하늘") == U'늘');
  const auto pieces = split_whitespace("게에　관한  책", 10);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[1].text == "관한");
  CHECK(pieces[0].begin == 10);
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
  CHECK(join({"a", "b"}, "; ") == "a; b");
}
