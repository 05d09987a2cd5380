#pragma once

// oddcover command-line front end.
//
//   construct --family F --n N [--matrix FILE] [--seed S] [--output FILE]
//   verify    --input FILE
//   link      --input FILE --vertex V [--output FILE]
//   search    --n N --r R [--max-size M] [--cap C] [--emit FILE]
//   table     --r R [--from A] [--to B] [--resolve-up-to N]
//
// Every subcommand takes --format text|json.  Exit codes: 0 success/PASS,
// 1 FAIL or proven absent, 2 usage error, 3 resource cap reached.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcover/bounds.hpp"
#include "oddcover/constructions.hpp"
#include "oddcover/core.hpp"
#include "oddcover/four_cover.hpp"
#include "oddcover/io.hpp"
#include "oddcover/search.hpp"

namespace oddcover::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

inline const std::vector<std::string>& families() {
  static const std::vector<std::string> f = {"circle",    "gf3",  "signed",     "buchanan2", "buchanan3",
                                             "extend8k1", "four", "graph-best", "three-best"};
  return f;
}

inline std::uint64_t default_cap() {
  if (const char* env = std::getenv("ODDCOVER_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("ODDCOVER_CAP must be a non-negative integer");
    }
  }
  return kDefaultCandidateCap;
}

/// Builds the cover for one family.  Throws ValidationError with a one-line
/// reason when n does not fit the family.
inline Cover construct_family(const std::string& family, std::size_t n,
                              const std::optional<std::string>& matrix_path, std::uint64_t seed) {
  auto need = [&](bool ok, const char* why) {
    if (!ok) throw ValidationError(family + ": " + why);
  };
  if (family == "circle") {
    need(n >= 4 && n % 2 == 0, "n must be even and at least 4");
    return circle_cover(n);
  }
  if (family == "gf3") {
    need(is_power_of_three(n), "n must be a power of 3");
    return gf3_cover(n);
  }
  if (family == "signed") {
    if (matrix_path) {
      const auto M = parse_matrix(read_file(*matrix_path));
      need(n == 0 || n == 2 * M.dimension(), "n must be twice the matrix dimension");
      return signed_tripartition_cover(M);
    }
    need(n >= 4 && n % 2 == 0, "n must be even and at least 4");
    std::mt19937_64 rng(seed);
    return signed_tripartition_cover(SkewSignMatrix::random(n / 2, rng));
  }
  if (family == "buchanan2") {
    need(n >= 8 && n % 8 == 0, "n must be a positive multiple of 8");
    return buchanan_bipartite_cover(n / 2);
  }
  if (family == "buchanan3") {
    need(n >= 8 && n % 8 == 0, "n must be a positive multiple of 8");
    return signed_tripartition_cover(buchanan_matrix(n / 2));
  }
  if (family == "extend8k1") {
    need(n >= 9 && n % 8 == 1, "n must be 1 mod 8 and at least 9");
    return extend_to_8kplus1((n - 1) / 2);
  }
  if (family == "four") {
    need(n >= 4, "n must be at least 4");
    return recursive_four_cover(n);
  }
  if (family == "graph-best") {
    need(n >= 2, "n must be at least 2");
    return best_graph_cover(n);
  }
  if (family == "three-best") {
    need(n >= 3, "n must be at least 3");
    return best_three_cover(n);
  }
  throw ValidationError("unknown family " + family);
}

namespace detail {

inline std::string rset_text(const RSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

inline void write_cover(const Cover& c, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << dump(c);
  else
    save_cover(c, path);
}

inline ordered_json record_json(const BoundsRecord& rec) {
  return ordered_json{{"r", rec.r},           {"n", rec.n},
                      {"lower", rec.lower},   {"upper", rec.upper},
                      {"status", to_string(rec.status)}, {"provenance", rec.provenance}};
}

}  // namespace detail

/// Parses argv and runs one subcommand.  Output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd covers of complete graphs and hypergraphs", "oddcover"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output mode")->check(CLI::IsMember({"text", "json"}));
  };

  // construct
  auto* construct = app.add_subcommand("construct", "build a cover from one of the constructions");
  std::string family;
  std::size_t n = 0;
  std::optional<std::string> matrix;
  std::uint64_t seed = 1;
  std::string output;
  construct->add_option("--family", family)->required()->check(CLI::IsMember(families()));
  construct->add_option("--n", n, "ground set size");
  construct->add_option("--matrix", matrix, "SkewSignMatrix JSON (family signed)");
  construct->add_option("--seed", seed, "seed for a random sign matrix (family signed)");
  construct->add_option("--output", output, "write the cover JSON here (default stdout)");
  add_format(construct);

  // verify
  auto* verify = app.add_subcommand("verify", "check that a cover JSON is an odd cover");
  std::string input;
  verify->add_option("--input", input)->required();
  add_format(verify);

  // link
  auto* link_cmd = app.add_subcommand("link", "take the link of a cover at a vertex");
  Vertex vertex = 0;
  link_cmd->add_option("--input", input)->required();
  link_cmd->add_option("--vertex", vertex)->required();
  link_cmd->add_option("--output", output, "write the link cover JSON here (default stdout)");
  add_format(link_cmd);

  // search
  auto* search = app.add_subcommand("search", "exact minimum odd cover by exhaustive search");
  std::size_t r = 0;
  std::size_t max_size = 0;
  std::optional<std::uint64_t> cap;
  std::string emit;
  search->add_option("--n", n)->required();
  search->add_option("--r", r)->required();
  search->add_option("--max-size", max_size, "largest size to try (default: ledger upper bound)");
  search->add_option("--cap", cap, "candidate cap (default 1000000 or $ODDCOVER_CAP)");
  search->add_option("--emit", emit, "write the witness cover JSON here");
  add_format(search);

  // table
  auto* table = app.add_subcommand("table", "known values and bounds");
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t resolve_up_to = 0;
  table->add_option("--r", r)->required()->check(CLI::Range(2, 4));
  table->add_option("--from", from, "smallest n (default r)");
  table->add_option("--to", to, "largest n (default 20)");
  table->add_option("--resolve-up-to", resolve_up_to, "run exhaustive search on range rows with n up to this");
  add_format(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const bool json = format == "json";

  try {
    if (construct->parsed()) {
      const auto cover = construct_family(family, n, matrix, seed);
      const bool to_stdout = output.empty() || output == "-";
      detail::write_cover(cover, output, out);
      std::ostream& summary = to_stdout ? err : out;
      if (json)
        summary << ordered_json{{"family", family}, {"n", cover.n()}, {"r", cover.r()}, {"size", cover.size()}}.dump()
                << "\n";
      else
        summary << family << " n=" << cover.n() << " r=" << cover.r() << " size=" << cover.size() << "\n";
      return kOk;
    }

    if (verify->parsed()) {
      const auto cover = load_cover(input);
      const auto res = is_odd_cover(cover);
      if (json) {
        ordered_json j{{"result", res.odd ? "PASS" : "FAIL"}, {"n", cover.n()}, {"r", cover.r()},
                       {"size", cover.size()}};
        if (res.witness) j["witness"] = to_json(*res.witness);
        out << j.dump() << "\n";
      } else if (res.odd) {
        out << "PASS n=" << cover.n() << " r=" << cover.r() << " size=" << cover.size() << "\n";
      } else {
        out << "FAIL n=" << cover.n() << " r=" << cover.r() << " size=" << cover.size()
            << " witness=" << detail::rset_text(*res.witness) << "\n";
      }
      return res.odd ? kOk : kFail;
    }

    if (link_cmd->parsed()) {
      const auto cover = link(load_cover(input), vertex);
      const bool to_stdout = output.empty() || output == "-";
      detail::write_cover(cover, output, out);
      std::ostream& summary = to_stdout ? err : out;
      if (json)
        summary << ordered_json{{"n", cover.n()}, {"r", cover.r()}, {"size", cover.size()}}.dump() << "\n";
      else
        summary << "link n=" << cover.n() << " r=" << cover.r() << " size=" << cover.size() << "\n";
      return kOk;
    }

    if (search->parsed()) {
      BoundsLedger ledger;
      SearchOptions opt;
      opt.candidate_cap = cap ? *cap : default_cap();
      if (max_size == 0) max_size = (r >= 2 && r <= 4 && n >= r) ? ledger.lookup(n, r).upper : n;
      const auto res = min_odd_cover(n, r, max_size, opt);
      std::optional<BoundsRecord> rec;
      if (r >= 2 && r <= 4) rec = ledger.commit(n, r, res);
      if (res.cover && !emit.empty()) save_cover(*res.cover, emit);
      if (json) {
        ordered_json j{{"n", n}, {"r", r}, {"max_size", max_size}, {"status", to_string(res.status)},
                       {"proven_above", res.proven_above}, {"strategy", res.strategy}};
        if (res.cover) j["size"] = res.cover->size();
        if (!res.reason.empty()) j["reason"] = res.reason;
        if (rec) j["ledger"] = detail::record_json(*rec);
        out << j.dump() << "\n";
      } else {
        out << to_string(res.status) << " n=" << n << " r=" << r;
        if (res.cover) out << " size=" << res.cover->size();
        out << " (no cover of size <= " << res.proven_above << ")";
        if (!res.reason.empty()) out << " reason: " << res.reason;
        out << "\n";
        if (res.cover) out << dump(*res.cover);
      }
      switch (res.status) {
        case SearchStatus::found: return kOk;
        case SearchStatus::absent: return kFail;
        case SearchStatus::inconclusive: return kInconclusive;
      }
    }

    if (table->parsed()) {
      if (from == 0) from = r;
      if (to == 0) to = 20;
      if (from < r) throw ValidationError("table: --from must be at least r");
      BoundsLedger ledger;
      std::vector<BoundsRecord> rows;
      for (std::size_t m = from; m <= to; ++m) {
        auto rec = ledger.lookup(m, r);
        if (rec.status == BoundStatus::range && m <= resolve_up_to) {
          SearchOptions opt;
          opt.candidate_cap = default_cap();
          rec = ledger.commit(m, r, min_odd_cover(m, r, rec.upper, opt));
        }
        rows.push_back(std::move(rec));
      }
      if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rec : rows) {
          auto j = detail::record_json(rec);
          if (r == 3) {
            const auto cmp = compare_with_partition(rec.n, 3);
            j["f3"] = cmp.partition_number;
            j["strict"] = cmp.strict;
          }
          arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
      } else {
        out << std::left << std::setw(4) << "r" << std::setw(6) << "n" << std::setw(7) << "lower"
            << std::setw(7) << "upper" << std::setw(8) << "status";
        if (r == 3) out << std::setw(5) << "f3" << std::setw(8) << "strict";
        out << "provenance\n";
        for (const auto& rec : rows) {
          out << std::setw(4) << rec.r << std::setw(6) << rec.n << std::setw(7) << rec.lower << std::setw(7)
              << rec.upper << std::setw(8) << to_string(rec.status);
          if (r == 3) {
            const auto cmp = compare_with_partition(rec.n, 3);
            out << std::setw(5) << cmp.partition_number << std::setw(8) << (cmp.strict ? "yes" : "no");
          }
          for (std::size_t i = 0; i < rec.provenance.size(); ++i) out << (i ? "; " : "") << rec.provenance[i];
          out << "\n";
        }
      }
      return kOk;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace oddcover::cli
