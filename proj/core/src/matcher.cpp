#include "kpvc/matcher.hpp"

#include <algorithm>

#include "kpvc/utf8.hpp"

namespace kpvc {

namespace {

bool is_trailing_punct(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U'?': case U'!': case U';': case U':':
    case U'"': case U'\'': case U')': case U']': case U'…': case U'」': case U'』':
    case U'”': case U'’': case U'。': case U'、':
      return true;
    default:
      return false;
  }
}

std::string strip_trailing_punct(const std::string& word) {
  std::u32string cps = utf8::decode(word);
  while (!cps.empty() && is_trailing_punct(cps.back())) cps.pop_back();
  return utf8::encode(cps);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string realize_tokens(const TaggedSentence& s, std::size_t begin, std::size_t end) {
  std::vector<std::string> parts;
  for (std::size_t i = begin; i < end; ++i) parts.push_back(s.tokens[i].surface);
  return realize(parts);
}

bool eojeol_is_adverbs(const TaggedSentence& s, std::size_t e, const Tagset& tags) {
  const std::size_t b = s.first_token(e);
  const std::size_t end = s.end_token(e);
  if (b >= end) return false;
  for (std::size_t i = b; i < end; ++i) {
    if (!tags.is_adverb(s.tokens[i].tag)) return false;
  }
  return true;
}

// Host noun text of the host eojeol: the eojeol surface minus the postposition.
std::string host_text(const TaggedSentence& s, std::size_t host_eojeol, std::size_t adposition) {
  const std::string& word = host_eojeol < s.eojeols.size() ? s.eojeols[host_eojeol] : std::string();
  const std::string& adp = s.tokens[adposition].surface;
  if (ends_with(word, adp) && word.size() > adp.size()) return word.substr(0, word.size() - adp.size());
  return realize_tokens(s, s.first_token(host_eojeol), adposition);
}

}  // namespace

std::vector<SurfaceForm> expand(const Lexicon& lex) {
  std::vector<SurfaceForm> out;
  for (std::size_t i = 0; i < lex.entries.size(); ++i) {
    const PvcEntry& e = lex.entries[i];
    for (const auto& lemma : e.licensed_postpositions()) {
      for (const auto& surface : hangul::allomorphs(lemma)) {
        for (const auto& suffix : e.suffix_forms) {
          out.push_back({i, e.stem_hangul, lemma, surface, suffix, e.stem_hangul + suffix});
        }
      }
    }
  }
  return out;
}

FormIndex::FormIndex(Lexicon lex, SuffixInventory suffixes)
    : lexicon_(std::move(lex)), suffixes_(std::move(suffixes)), forms_(expand(lexicon_)) {
  for (std::size_t i = 0; i < forms_.size(); ++i) by_verb_[forms_[i].verb].push_back(i);
}

std::span<const std::size_t> FormIndex::by_verb(std::string_view verb) const {
  const auto it = by_verb_.find(std::string(verb));
  if (it == by_verb_.end()) return {};
  return it->second;
}

std::vector<Match> match_raw(const RawSentence& sentence, const FormIndex& index,
                             const MatchOptions& options) {
  std::vector<Match> out;
  const auto& words = sentence.eojeols;
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const std::string& host_word = words[i];
    const std::string verb_word = strip_trailing_punct(words[i + 1]);

    struct Option {
      std::size_t form;
      std::optional<std::string> particle;
    };
    std::vector<Option> options_here;
    for (std::size_t f : index.by_verb(verb_word)) options_here.push_back({f, std::nullopt});
    for (const auto& particle : options.trailing_particles) {
      if (particle.empty() || !ends_with(verb_word, particle) || verb_word.size() == particle.size()) {
        continue;
      }
      const std::string base = verb_word.substr(0, verb_word.size() - particle.size());
      for (std::size_t f : index.by_verb(base)) {
        if (index.suffixes().kind(index.forms()[f].suffix) == SuffixKind::Connective) {
          options_here.push_back({f, particle});
        }
      }
    }

    const Option* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& opt : options_here) {
      const SurfaceForm& form = index.forms()[opt.form];
      if (!ends_with(host_word, form.postposition) || host_word.size() == form.postposition.size()) {
        continue;
      }
      const std::string host = host_word.substr(0, host_word.size() - form.postposition.size());
      if (hangul::allomorph(form.postposition_lemma, host, options.allomorph) != form.postposition) {
        continue;
      }
      const std::size_t len = utf8::length(form.postposition);
      if (best == nullptr || len > best_len) {
        best = &opt;
        best_len = len;
      }
    }
    if (best == nullptr) continue;

    const SurfaceForm& form = index.forms()[best->form];
    Match m;
    m.sentence_id = sentence.id;
    m.host_eojeol = i;
    m.verb_eojeol = i + 1;
    m.stem = form.stem;
    m.postposition_lemma = form.postposition_lemma;
    m.postposition = form.postposition;
    m.suffix = form.suffix;
    m.postposition_offset = utf8::length(host_word) - best_len;
    m.trailing_particle = best->particle;
    out.push_back(std::move(m));
    ++i;  // the verb eojeol cannot host the next match
  }
  return out;
}

std::vector<Candidate> find_candidates(const TaggedSentence& s, const Tagset& tags) {
  std::vector<Candidate> out;
  const auto& toks = s.tokens;
  std::size_t next_free = 0;  // first eojeol that may still act as a host

  for (std::size_t j = 0; j < toks.size(); ++j) {
    const MorphToken& adp = toks[j];
    if (!tags.is_adposition(adp.tag) || adp.eojeol < next_free) continue;
    // The postposition closes its eojeol and follows a nonempty host.
    if (j + 1 < toks.size() && toks[j + 1].eojeol == adp.eojeol) continue;
    if (j == 0 || toks[j - 1].eojeol != adp.eojeol) continue;

    std::size_t e = adp.eojeol + 1;
    while (e < s.eojeols.size() && eojeol_is_adverbs(s, e, tags)) ++e;
    const std::size_t k = s.first_token(e);
    if (k + 2 >= toks.size() || toks[k].eojeol != e) continue;
    if (!tags.is_stem(toks[k].tag)) continue;
    if (toks[k + 1].eojeol != e || toks[k + 1].surface != tags.verbalizer_surface ||
        !tags.is_verbalizer(toks[k + 1].tag)) {
      continue;
    }
    std::size_t end = k + 2;
    while (end < toks.size() && toks[end].eojeol == e && tags.is_ending(toks[end].tag)) ++end;
    if (end == k + 2) continue;

    Candidate c;
    c.adposition = j;
    c.stem = k;
    c.verb_end = end;
    c.host_eojeol = adp.eojeol;
    c.verb_eojeol = e;
    c.remainder = {end, s.end_token(e)};

    const std::string& stem = toks[k].surface;
    const std::string& word = e < s.eojeols.size() ? s.eojeols[e] : std::string();
    const std::string rest = realize_tokens(s, c.remainder.begin, c.remainder.end);
    if (word.starts_with(stem) && word.size() > stem.size() &&
        (rest.empty() || (ends_with(word, rest) && word.size() > stem.size() + rest.size()))) {
      c.suffix = word.substr(stem.size(), word.size() - stem.size() - rest.size());
    } else {
      c.suffix = realize_tokens(s, k + 1, end);
    }
    out.push_back(std::move(c));
    next_free = e + 1;
  }
  return out;
}

std::vector<Match> match_tagged(const TaggedSentence& sentence, const FormIndex& index,
                                const MatchOptions& options) {
  std::vector<Match> out;
  const Lexicon& lex = index.lexicon();
  for (const Candidate& c : find_candidates(sentence, options.tagset)) {
    const MorphToken& adp = sentence.tokens[c.adposition];
    const MorphToken& stem = sentence.tokens[c.stem];
    const PvcEntry* entry = lex.find(stem.surface);
    if (entry == nullptr) continue;
    const auto lemma = hangul::lemma_of(adp.surface);
    if (!lemma || !entry->licenses_postposition(*lemma)) continue;

    const std::string host = host_text(sentence, c.host_eojeol, c.adposition);
    if (host.empty() || hangul::allomorph(*lemma, host, options.allomorph) != adp.surface) continue;

    if (options.strict) {
      if (!entry->licenses_suffix(c.suffix)) continue;
      bool tense = false;
      for (std::size_t i = c.stem; i < c.verb_end; ++i) {
        tense = tense || options.tagset.is_tense(sentence.tokens[i].tag);
      }
      if (tense) continue;
    }

    Match m;
    m.sentence_id = sentence.id;
    m.host_eojeol = c.host_eojeol;
    m.verb_eojeol = c.verb_eojeol;
    m.adposition_token = c.adposition;
    m.verb_tokens = TokenSpan{c.stem, c.verb_end};
    m.stem = stem.surface;
    m.postposition_lemma = *lemma;
    m.postposition = adp.surface;
    m.suffix = c.suffix;
    m.postposition_offset = utf8::length(host);
    if (c.remainder.end == c.remainder.begin + 1 &&
        index.suffixes().kind(c.suffix) == SuffixKind::Connective) {
      const MorphToken& tail = sentence.tokens[c.remainder.begin];
      if (options.tagset.is_adposition(tail.tag) &&
          std::find(options.trailing_particles.begin(), options.trailing_particles.end(),
                    tail.surface) != options.trailing_particles.end()) {
        m.trailing_particle = tail.surface;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace kpvc
