// Command-line front end: builds serialized indexes, answers locate queries
// with a selectable engine, and reports repetitiveness measures.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "stpd/archive.hpp"
#include "stpd/measures.hpp"
#include "stpd/stpd.hpp"

namespace {

using namespace stpd;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

Text load_text(const std::string& path, bool raw_terminator) {
  auto bytes = read_file(path);
  if (bytes.empty()) throw DataError(path + " is empty");
  try {
    return Text::from_bytes(bytes, raw_terminator);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(e.what()));
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct EngineChoice {
  enum class Kind { StColex, StLex, General } kind = Kind::StColex;
  PermKind perm = PermKind::COLEX;
};

EngineChoice parse_engine(const std::string& name) {
  if (name == "stcolex") return {EngineChoice::Kind::StColex, PermKind::COLEX};
  if (name == "stlex") return {EngineChoice::Kind::StLex, PermKind::LEX};
  if (name.rfind("general:", 0) == 0) {
    const std::string kind = name.substr(8);
    for (int k = 0; k < kPermKindCount; ++k) {
      if (kind == to_string(static_cast<PermKind>(k))) {
        return {EngineChoice::Kind::General, static_cast<PermKind>(k)};
      }
    }
  }
  throw CLI::ValidationError("--engine", "unknown engine '" + name + "'");
}

// One loaded engine behind a common locate interface.
struct Engine {
  std::variant<StColexIndex, StLexTree, GeneralLocator> impl;

  std::vector<pos_t> locate_all(std::span<const sym_t> p) const {
    if (auto* c = std::get_if<StColexIndex>(&impl)) return c->locate_all(p);
    if (auto* t = std::get_if<StLexTree>(&impl)) return t->locate_all(p);
    return std::get<GeneralLocator>(impl).locate_all(p);
  }

  std::optional<pos_t> locate_one(std::span<const sym_t> p) const {
    if (auto* c = std::get_if<StColexIndex>(&impl)) return c->locate_primary(p);
    if (auto* t = std::get_if<StLexTree>(&impl)) {
      auto occs = t->locate_all(p);
      if (occs.empty()) return std::nullopt;
      return *std::min_element(occs.begin(), occs.end());
    }
    return std::get<GeneralLocator>(impl).locate_primary(p);
  }
};

Engine make_engine(const IndexArchive& archive, const EngineChoice& choice) {
  switch (choice.kind) {
    case EngineChoice::Kind::StColex: return {archive.make_stcolex_index()};
    case EngineChoice::Kind::StLex: return {archive.make_stlex_tree()};
    case EngineChoice::Kind::General: return {archive.make_general_locator(choice.perm)};
  }
  throw std::logic_error("unreachable");
}

int cmd_build(const std::string& input, const std::string& output, bool raw_terminator,
              std::uint64_t block_words, std::uint64_t kmax, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Text text = load_text(input, raw_terminator);
  IndexArchive archive = IndexArchive::build(text, block_words, kmax, seed);

  std::ofstream out(output, std::ios::binary);
  if (!out) throw DataError("cannot write " + output);
  archive.save(out);
  out.close();
  if (!out) throw DataError("write to " + output + " failed");

  MeasureRow row;
  row.n = text.size();
  row.stlex_minus = archive.pda[static_cast<int>(PermKind::LEX)].size();
  row.stcolex_minus = archive.pda[static_cast<int>(PermKind::COLEX)].size();
  row.stpos_minus = archive.pda[static_cast<int>(PermKind::POS)].size();
  row.r = count_runs(bwt(text));
  row.rbar = count_runs(cobwt(text));
  std::cout << measures_summary(row) << "\n";
  std::cerr << "elapsed_ms=" << elapsed_ms(start) << "\n";
  return kExitOk;
}

int cmd_locate(const std::string& archive_path, const std::string& patterns_path,
               const std::string& mode, const std::string& engine_name, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  std::ifstream in(archive_path, std::ios::binary);
  if (!in) throw DataError("cannot read " + archive_path);
  IndexArchive archive;
  try {
    archive = IndexArchive::load(in);
  } catch (const CorruptionError& e) {
    throw DataError(std::string(e.what()));
  }
  const Engine engine = make_engine(archive, parse_engine(engine_name));
  const sym_t terminator = archive.text.terminator();

  std::ifstream pf(patterns_path, std::ios::binary);
  if (!pf) throw DataError("cannot read " + patterns_path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(pf, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }

  const bool all = mode == "all";
  std::vector<std::string> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < lines.size();) {
      const std::string& line = lines[k];
      std::ostringstream out;
      out << (k + 1) << '\t';
      std::vector<sym_t> pattern;
      pattern.reserve(line.size());
      bool has_terminator = false;
      for (char c : line) {
        const sym_t s = static_cast<std::uint8_t>(c);
        has_terminator |= s == terminator;
        pattern.push_back(s);
      }
      if (pattern.empty() || has_terminator) {
        out << "ERROR\t" << (pattern.empty() ? "empty pattern" : "pattern contains terminator byte");
      } else if (all) {
        auto occs = engine.locate_all(pattern);
        std::sort(occs.begin(), occs.end());
        out << occs.size() << '\t';
        for (std::size_t i = 0; i < occs.size(); ++i) {
          if (i) out << ' ';
          out << occs[i];
        }
      } else {
        const auto occ = engine.locate_one(pattern);
        if (occ) out << *occ;
        else out << "NOT_FOUND";
      }
      results[k] = out.str();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : results) std::cout << r << "\n";
  std::cerr << "elapsed_ms=" << elapsed_ms(start) << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& input, bool raw_terminator) {
  const auto start = std::chrono::steady_clock::now();
  const Text text = load_text(input, raw_terminator);
  const MeasureRow row = compute_measures(text);
  std::cout << measures_tsv_header() << "\n" << measures_tsv_row(row) << "\n";
  std::cerr << "elapsed_ms=" << elapsed_ms(start) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"suffix-tree path-decomposition indexes: build, locate, stats"};
  app.require_subcommand(1);

  std::string input, output = "index.stpd", patterns, mode = "all", engine = "stcolex";
  bool raw_terminator = false;
  std::uint64_t block_words = 64, kmax = 12, seed = kDefaultFingerprintSeed;
  unsigned threads = 1;

  auto* build = app.add_subcommand("build", "build an index archive from a text file");
  build->add_option("input", input, "input text file")->required();
  build->add_option("-o,--output", output, "archive output path");
  build->add_flag("--raw-terminator", raw_terminator,
                  "input already ends with a unique minimal byte");
  build->add_option("--block-words", block_words, "prefix-array block size B")->check(CLI::PositiveNumber);
  build->add_option("--kmax", kmax, "short-context table cap (0 disables)");
  build->add_option("--seed", seed, "fingerprint base seed");

  auto* locate = app.add_subcommand("locate", "run locate queries from a pattern file");
  locate->add_option("archive", input, "index archive")->required();
  locate->add_option("patterns", patterns, "pattern file, one pattern per line")->required();
  locate->add_option("--mode", mode, "one | all")->check(CLI::IsMember({"one", "all"}));
  locate->add_option("--engine", engine,
                     "stcolex | stlex | general:{lex,lex-dual,colex,colex-dual,pos,pos-dual}");
  locate->add_option("--threads", threads, "worker threads over patterns")->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "print repetitiveness measures of a text file");
  stats->add_option("input", input, "input text file")->required();
  stats->add_flag("--raw-terminator", raw_terminator,
                  "input already ends with a unique minimal byte");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(input, output, raw_terminator, block_words, kmax, seed);
    if (locate->parsed()) return cmd_locate(input, patterns, mode, engine, threads);
    return cmd_stats(input, raw_terminator);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
