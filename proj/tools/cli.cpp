#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "kpvc/annotator.hpp"
#include "kpvc/classifier.hpp"
#include "kpvc/corpus_io.hpp"
#include "kpvc/lexicon.hpp"
#include "kpvc/matcher.hpp"
#include "kpvc/miner.hpp"

namespace kpvc::cli {

namespace {

/// Unreadable input or output files; reported with exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

enum class InputFormat { Raw, Tagged, Conllu };

std::string read_all(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::vector<std::string> inputs_or_stdin(const std::vector<std::string>& inputs) {
  return inputs.empty() ? std::vector<std::string>{"-"} : inputs;
}

std::vector<TaggedSentence> read_tagged_inputs(const std::vector<std::string>& inputs, InputFormat fmt,
                                               std::istream& stdin_stream) {
  std::vector<TaggedSentence> corpus;
  for (const auto& path : inputs_or_stdin(inputs)) {
    std::istringstream text(read_all(path, stdin_stream));
    auto part = fmt == InputFormat::Conllu ? read_conllu(text) : read_tagged(text);
    for (auto& s : part) corpus.push_back(std::move(s));
  }
  return corpus;
}

/// Writes to `path`, or to `fallback` when path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

SuffixInventory inventory(const RunConfig& c) {
  SuffixInventory inv = SuffixInventory::standard();
  for (const auto& [form, kind] : c.extra_suffixes) inv.add(form, kind);
  return inv;
}

Tagset tagset(const RunConfig& c) {
  Tagset t;
  for (const auto& [key, value] : c.tag_overrides) t.set(key, value);
  return t;
}

ValidationOptions validation_options(const RunConfig& c) {
  ValidationOptions v;
  v.suffixes = inventory(c);
  return v;
}

Lexicon lexicon_for(const RunConfig& c) {
  if (!c.lexicon_path) return builtin();
  std::ifstream f(*c.lexicon_path, std::ios::binary);
  if (!f) throw IoError("cannot read " + *c.lexicon_path);
  return load(f, c.lexicon_format, validation_options(c));
}

MatchOptions match_options(const RunConfig& c) {
  MatchOptions m;
  m.trailing_particles = c.particles;
  m.strict = c.strict;
  m.allomorph.non_hangul = c.non_hangul;
  m.tagset = tagset(c);
  m.suffixes = inventory(c);
  return m;
}

ClassifierOptions classifier_options(const RunConfig& c) {
  ClassifierOptions o;
  o.tagset = tagset(c);
  o.suffixes = inventory(c);
  o.legal_register = c.legal_register;
  o.thresholds = {c.theta_free, c.theta_fixed};
  return o;
}

int cmd_lexicon_validate(const RunConfig& c, Streams s) {
  Lexicon lex;
  if (c.lexicon_path) {
    std::ifstream f(*c.lexicon_path, std::ios::binary);
    if (!f) throw IoError("cannot read " + *c.lexicon_path);
    lex = parse_lexicon(f, c.lexicon_format);
  } else {
    lex = builtin();
  }
  const auto violations = validate(lex, validation_options(c));
  for (const auto& v : violations) {
    s.out << "entry " << v.entry << " (" << v.stem << "): " << v.rule << ": " << v.message << '\n';
  }
  s.out << lex.entries.size() << " entries, " << violations.size() << " violations\n";
  return violations.empty() ? kOk : kValidationFailure;
}

int cmd_lexicon_export(const RunConfig& c, const std::string& format, const std::string& output,
                       Streams s) {
  Output out(output, s.out);
  export_lexicon(lexicon_for(c), out.get(), format == "json" ? LexiconFormat::Json : LexiconFormat::Tsv);
  return kOk;
}

int cmd_forms(const RunConfig& c, const std::string& output, Streams s) {
  Output out(output, s.out);
  out.get() << "stem\tpostposition_lemma\tpostposition\tsuffix\tverb\n";
  for (const auto& f : expand(lexicon_for(c))) {
    out.get() << f.stem << '\t' << f.postposition_lemma << '\t' << f.postposition << '\t' << f.suffix
              << '\t' << f.verb << '\n';
  }
  return kOk;
}

int cmd_match(const RunConfig& c, InputFormat fmt, const std::vector<std::string>& inputs,
              const std::string& output, Streams s) {
  const FormIndex index(lexicon_for(c), inventory(c));
  const MatchOptions opts = match_options(c);
  Output out(output, s.out);
  if (fmt == InputFormat::Raw) {
    for (const auto& path : inputs_or_stdin(inputs)) {
      std::istringstream text(read_all(path, s.in));
      for (const auto& sentence : read_plain(text)) {
        for (const auto& m : match_raw(sentence, index, opts)) out.get() << match_record(m) << '\n';
      }
    }
    return kOk;
  }
  for (const auto& sentence : read_tagged_inputs(inputs, fmt, s.in)) {
    for (const auto& m : match_tagged(sentence, index, opts)) out.get() << match_record(m) << '\n';
  }
  return kOk;
}

int cmd_mine(const RunConfig& c, InputFormat fmt, const std::vector<std::string>& inputs,
             const std::string& output, Streams s) {
  const auto corpus = read_tagged_inputs(inputs, fmt, s.in);
  Output out(output, s.out);
  report_tsv(rank(mine(corpus, tagset(c), c.jobs), c.k), out.get());
  return kOk;
}

int cmd_suggest(const RunConfig& c, InputFormat fmt, const std::vector<std::string>& inputs,
                const std::string& output, Streams s) {
  const Lexicon lex = lexicon_for(c);
  const auto corpus = read_tagged_inputs(inputs, fmt, s.in);
  const auto report = rank(mine(corpus, tagset(c), c.jobs), c.k);
  Output out(output, s.out);
  out.get() << "stem\ttotal\tdistinct_triples\tboundness\tsuggestion\n";
  char score[32];
  for (const auto& row : report.rows) {
    if (lex.find(row.stats.stem) != nullptr) continue;
    std::snprintf(score, sizeof score, "%.4f", row.boundness);
    out.get() << row.stats.stem << '\t' << row.stats.total << '\t' << row.stats.distinct_triples() << '\t'
              << score << '\t'
              << to_string(classify_open(row.stats.stem, row.stats, lex, {c.theta_free, c.theta_fixed}))
              << '\n';
  }
  return kOk;
}

int cmd_classify(const RunConfig& c, InputFormat fmt, const std::vector<std::string>& inputs,
                 const std::string& output, Streams s) {
  const auto corpus = read_tagged_inputs(inputs, fmt, s.in);
  const FormIndex index(lexicon_for(c), inventory(c));
  const auto results = classify_all(corpus, index, match_options(c), classifier_options(c), c.jobs);
  Output out(output, s.out);
  report_json(results, out.get());
  return kOk;
}

int cmd_annotate(const RunConfig& c, InputFormat fmt, const std::vector<std::string>& inputs,
                 const std::string& output, const std::string& report, Streams s) {
  const auto corpus = read_tagged_inputs(inputs, fmt, s.in);
  const FormIndex index(lexicon_for(c), inventory(c));
  const auto results = classify_all(corpus, index, match_options(c), classifier_options(c), c.jobs);
  std::vector<CuptSentence> cupt;
  cupt.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    cupt.push_back(annotate(corpus[i], results[i], AnnotateOptions{c.category}));
  }
  Output out(output, s.out);
  write_cupt(cupt, out.get());
  if (!report.empty()) {
    Output rep(report, s.out);
    report_json(results, rep.get());
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identify, mine, classify and annotate Korean postpositional verb-based constructions"};
  app.name("kpvc");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, lexicon_path, lexicon_format, particles, extra_suffixes, category, non_hangul;
  std::vector<std::string> tag_overrides;
  bool strict = false, legal_register = false;
  double theta_free = 0;
  std::size_t theta_fixed = 0, k = 0;
  unsigned jobs = 0;

  app.add_option("--config", config_path, "key = value config file; flags override it");
  auto* o_lexicon = app.add_option("--lexicon", lexicon_path, "lexicon file (default: built-in)");
  auto* o_lexfmt = app.add_option("--lexicon-format", lexicon_format, "tsv or json")
                       ->check(CLI::IsMember({"tsv", "json"}));
  auto* o_particles = app.add_option("--particles", particles, "comma-separated trailing particles");
  auto* o_suffixes = app.add_option("--extra-suffixes", extra_suffixes, "extra suffix forms, form:kind,...");
  auto* o_tags = app.add_option("--tag", tag_overrides, "tag class override, class=prefixes");
  auto* o_strict = app.add_flag("--strict", strict, "drop matches with tense infixes or unlicensed endings");
  auto* o_legal = app.add_flag("--legal-register", legal_register, "accept clause-final gerundial 함");
  auto* o_free = app.add_option("--theta-free", theta_free, "boundness below which a stem is free");
  auto* o_fixed = app.add_option("--theta-fixed", theta_fixed, "max distinct triples for a fixed stem");
  auto* o_k = app.add_option("-k", k, "number of ranked stems");
  auto* o_jobs = app.add_option("-j,--jobs", jobs, "worker threads");
  auto* o_category = app.add_option("--category", category, "MWE category label");
  auto* o_nonhangul = app.add_option("--non-hangul", non_hangul, "allomorph after non-Hangul hosts")
                          ->check(CLI::IsMember({"lemma", "consonant"}));

  std::string output, report, input_format = "tagged", export_format = "tsv";
  std::vector<std::string> inputs;
  auto add_io = [&](CLI::App* sub, bool raw_allowed) {
    sub->add_option("inputs", inputs, "input files (default: standard input)");
    sub->add_option("-o,--output", output, "output file (default: standard output)");
    sub->add_option("-f,--input-format", input_format, "input format")
        ->check(raw_allowed ? CLI::IsMember({"raw", "tagged", "conllu"})
                            : CLI::IsMember({"tagged", "conllu"}));
  };

  auto* lexicon_cmd = app.add_subcommand("lexicon", "inspect the PVC lexicon");
  lexicon_cmd->require_subcommand(1);
  auto* validate_cmd = lexicon_cmd->add_subcommand("validate", "check lexicon invariants");
  auto* export_cmd = lexicon_cmd->add_subcommand("export", "write the lexicon");
  export_cmd->add_option("--format", export_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  export_cmd->add_option("-o,--output", output, "output file");

  auto* forms_cmd = app.add_subcommand("forms", "list every surface form of the lexicon");
  forms_cmd->add_option("-o,--output", output, "output file");
  auto* match_cmd = app.add_subcommand("match", "locate PVC candidates as JSON lines");
  add_io(match_cmd, true);
  auto* mine_cmd = app.add_subcommand("mine", "rank stems from a tagged corpus as TSV");
  add_io(mine_cmd, false);
  auto* suggest_cmd = app.add_subcommand("suggest", "triage mined stems outside the lexicon");
  add_io(suggest_cmd, false);
  auto* classify_cmd = app.add_subcommand("classify", "classify matches as JSON lines");
  add_io(classify_cmd, false);
  auto* annotate_cmd = app.add_subcommand("annotate", "write cupt annotations");
  add_io(annotate_cmd, false);
  annotate_cmd->add_option("--report", report, "also write the JSON-lines report here");

  std::vector<std::string> argv_storage{"kpvc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kpvc: " << e.what() << '\n';
    return kUsageError;
  }

  Streams streams{in, out, err};
  try {
    RunConfig config;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw IoError("cannot read " + config_path);
      apply_config_file(config, f);
    }
    if (o_lexicon->count()) config.lexicon_path = lexicon_path;
    if (o_lexfmt->count()) apply_setting(config, "lexicon_format", lexicon_format);
    if (o_particles->count()) apply_setting(config, "particles", particles);
    if (o_suffixes->count()) apply_setting(config, "extra_suffixes", extra_suffixes);
    for (const auto& t : tag_overrides) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw ConfigError("--tag expects class=prefixes");
      apply_setting(config, "tag." + t.substr(0, eq), t.substr(eq + 1));
    }
    (void)o_tags;
    if (o_strict->count()) config.strict = strict;
    if (o_legal->count()) config.legal_register = legal_register;
    if (o_free->count()) config.theta_free = theta_free;
    if (o_fixed->count()) config.theta_fixed = theta_fixed;
    if (o_k->count()) config.k = k;
    if (o_jobs->count()) config.jobs = jobs;
    if (o_category->count()) apply_setting(config, "category", category);
    if (o_nonhangul->count()) apply_setting(config, "non_hangul", non_hangul);
    check(config);

    const InputFormat fmt = input_format == "raw"      ? InputFormat::Raw
                            : input_format == "conllu" ? InputFormat::Conllu
                                                       : InputFormat::Tagged;
    if (*validate_cmd) return cmd_lexicon_validate(config, streams);
    if (*export_cmd) return cmd_lexicon_export(config, export_format, output, streams);
    if (*forms_cmd) return cmd_forms(config, output, streams);
    if (*match_cmd) return cmd_match(config, fmt, inputs, output, streams);
    if (*mine_cmd) return cmd_mine(config, fmt, inputs, output, streams);
    if (*suggest_cmd) return cmd_suggest(config, fmt, inputs, output, streams);
    if (*classify_cmd) return cmd_classify(config, fmt, inputs, output, streams);
    if (*annotate_cmd) return cmd_annotate(config, fmt, inputs, output, report, streams);
  } catch (const LexiconValidationError& e) {
    err << "kpvc: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const Error& e) {
    err << "kpvc: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "kpvc: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kpvc::cli
