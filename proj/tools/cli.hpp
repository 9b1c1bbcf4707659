#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "butterfly/butterfly.hpp"

namespace butterfly::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Text, Json, Csv };

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << '\n';
}

inline void write_table(std::ostream& out, const Table& t, Format format) {
  if (format == Format::Csv) {
    write_csv_row(out, t.columns);
    for (const auto& row : t.rows) write_csv_row(out, row);
  } else if (format == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    out << nlohmann::json{{"columns", t.columns}, {"rows", rows}, {"passed", t.passed}}.dump(2) << '\n';
  } else {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    const auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << "  ";
        out << std::string(width[i] - row[i].size(), ' ') << row[i];
      }
      out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

inline nlohmann::json result_json(const CheckResult& r) {
  nlohmann::json facts = nlohmann::json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  nlohmann::json j{{"target", r.target}, {"n", r.n}, {"checked", r.checked}, {"failures", r.failures},
                   {"facts", facts}, {"verdict", r.passed() ? "PASS" : "FAIL"}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

inline void write_results(std::ostream& out, const std::vector<CheckResult>& results, Format format) {
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    out << nlohmann::json{{"results", arr}, {"verdict", all ? "PASS" : "FAIL"}}.dump(2) << '\n';
    return;
  }
  if (format == Format::Csv) {
    write_csv_row(out, {"target", "n", "key", "value"});
    for (const auto& r : results) {
      const std::string n = std::to_string(r.n);
      write_csv_row(out, {r.target, n, "checked", std::to_string(r.checked)});
      write_csv_row(out, {r.target, n, "failures", std::to_string(r.failures)});
      for (const auto& [k, v] : r.facts) write_csv_row(out, {r.target, n, k, v});
      if (r.counterexample) write_csv_row(out, {r.target, n, "counterexample", *r.counterexample});
      write_csv_row(out, {r.target, n, "verdict", r.passed() ? "PASS" : "FAIL"});
    }
    return;
  }
  for (const auto& r : results) {
    out << "target: " << r.target << '\n'
        << "n: " << r.n << '\n'
        << "checked: " << r.checked << '\n'
        << "failures: " << r.failures << '\n';
    for (const auto& [k, v] : r.facts) out << k << ": " << v << '\n';
    if (r.counterexample) out << "counterexample: " << *r.counterexample << '\n';
    out << "verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n\n";
  }
  if (results.size() > 1) out << "overall: " << (all ? "PASS" : "FAIL") << '\n';
}

// Streams one structure per line (text, csv) or a single JSON array.
class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {
    if (format_ == Format::Json) out_ << "[";
    if (format_ == Format::Csv) out_ << "index,object\n";
  }

  void emit(const std::string& text, const nlohmann::json& json) {
    if (format_ == Format::Text) {
      out_ << text << '\n';
    } else if (format_ == Format::Csv) {
      write_csv_row(out_, {std::to_string(count_), text});
    } else {
      out_ << (count_ ? ",\n " : "\n ") << json.dump();
    }
    ++count_;
  }

  void finish() {
    if (format_ == Format::Json) out_ << (count_ ? "\n]\n" : "]\n");
  }

 private:
  std::ostream& out_;
  Format format_;
  std::size_t count_ = 0;
};

inline void enumerate(const std::string& kind, std::size_t n, Format format, std::ostream& out) {
  const Limits limits = Limits::from_env();
  Emitter e(out, format);
  const auto path = [&](const LatticePath& p) { e.emit(to_string(p), to_json(p)); };
  if (kind == "trees") {
    for_each_tree(n, [&](const PlaneTree& t) { e.emit(to_string(t), to_json(t)); }, limits.trees);
  } else if (kind == "dyck") {
    for_each_path(Alphabet::Dyck, n, PathConstraint::NonNegative, path, limits.paths);
  } else if (kind == "free-dyck") {
    for_each_path(Alphabet::Dyck, n, PathConstraint::Free, path, limits.paths);
  } else if (kind == "schroder") {
    for_each_path(Alphabet::Schroder, n, PathConstraint::NonNegative, path, limits.paths);
  } else if (kind == "free-schroder") {
    for_each_path(Alphabet::Schroder, n, PathConstraint::Free, path, limits.paths);
  } else {
    throw DomainError("unknown enumeration '" + kind + "'");
  }
  e.finish();
}

inline std::vector<CheckResult> verify(const std::vector<std::string>& target, std::size_t n, std::size_t colors) {
  const auto need = [&](std::size_t count) {
    if (target.size() != count) throw DomainError("malformed verify target");
  };
  const std::string& kind = target.at(0);
  if (kind == "involution-dyck" || kind == "involution-schroder") {
    need(1);
    return {verify_involution(kind.substr(kind.find('-') + 1), n)};
  }
  if (kind == "bijection") {
    need(2);
    return {verify_bijection(target[1], n, colors)};
  }
  if (kind == "involution") {
    need(2);
    return {verify_involution(target[1], n)};
  }
  if (kind == "identity") {
    need(2);
    return {verify_identity(target[1], n)};
  }
  if (kind == "all") {
    need(1);
    std::vector<CheckResult> out;
    for (const auto& b : bijection_names()) out.push_back(verify_bijection(b, n, colors));
    for (const auto* i : {"dyck", "schroder"}) out.push_back(verify_involution(i, n));
    for (const auto& i : identity_names()) out.push_back(verify_identity(i, n));
    return out;
  }
  throw DomainError("unknown verify target '" + kind + "'");
}

inline Table table(const std::string& name, std::size_t n) {
  if (name == "chung-feller") return chung_feller_table(n);
  if (name == "flaw-blocks") return flaw_blocks_table(n);
  if (name == "schroder-cf") return schroder_cf_table(n);
  if (name == "returns") return returns_table(n);
  throw DomainError("unknown table '" + name + "'");
}

inline void write_series(std::ostream& out, const Series& s, Format format) {
  if (format == Format::Json) {
    out << to_json(s).dump() << '\n';
  } else if (format == Format::Csv) {
    write_csv_row(out, {"n", "coefficient"});
    for (std::size_t i = 0; i < s.order(); ++i) write_csv_row(out, {std::to_string(i), s[i].str()});
  } else {
    out << to_string(s) << '\n';
  }
}

inline void riordan(const std::string& g, const std::string& f, std::size_t rows, const std::string& apply,
                    Format format, std::ostream& out) {
  if (rows == 0) throw DomainError("--rows must be at least 1");
  const std::size_t order = std::max(rows, kDefaultOrder);
  const RiordanArray array(named_series(g, order), named_series(f, order));
  const auto matrix = array.rows(rows);
  std::optional<Series> applied;
  if (!apply.empty()) applied = array.apply(named_series(apply, order), rows);
  if (format == Format::Json) {
    nlohmann::json j{{"g", g}, {"f", f}, {"rows", to_json(matrix)}};
    if (applied) j["apply"] = {{"series", apply}, {"result", to_json(*applied)}};
    out << j.dump() << '\n';
  } else if (format == Format::Csv) {
    write_csv_row(out, {"i", "j", "value"});
    for (std::size_t i = 0; i < matrix.size(); ++i)
      for (std::size_t j = 0; j < matrix[i].size(); ++j)
        write_csv_row(out, {std::to_string(i), std::to_string(j), matrix[i][j].str()});
    if (applied)
      for (std::size_t i = 0; i < applied->order(); ++i)
        write_csv_row(out, {std::to_string(i), "apply", (*applied)[i].str()});
  } else {
    for (const auto& row : matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j].str();
      out << '\n';
    }
    if (applied) out << "apply " << apply << ": " << to_string(*applied) << '\n';
  }
}

// Runs one command. args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive checker for plane-tree and lattice-path bijections", "butterfly"};
  app.require_subcommand(1);
  app.fallthrough();

  bool no_banner = false;
  std::string format_name = "text";
  app.add_flag("--no-banner", no_banner, "Suppress the version banner on stderr");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::size_t n = 0;
  std::size_t order = kDefaultOrder;
  std::size_t colors = 2;
  std::size_t rows = 0;
  std::string name, g, f, apply;
  std::vector<std::string> target;

  auto* en = app.add_subcommand("enumerate", "Stream every structure of size n");
  en->add_option("kind", name)->required()->check(CLI::IsMember({"trees", "dyck", "free-dyck", "schroder", "free-schroder"}));
  en->add_option("--n", n)->required();

  auto* ve = app.add_subcommand("verify", "Certify a bijection, involution or identity exhaustively");
  ve->add_option("target", target)->required()->expected(1, 2);
  ve->add_option("--n", n)->required();
  ve->add_option("--t", colors, "Number of chain colors for colored-chain-kcolored")->capture_default_str();

  auto* ta = app.add_subcommand("table", "Print a verification table");
  ta->add_option("name", name)->required()->check(CLI::IsMember({"chung-feller", "flaw-blocks", "schroder-cf", "returns"}));
  ta->add_option("--n", n)->required();

  auto* se = app.add_subcommand("series", "Expand a named series");
  se->add_option("name", name)->required()->check(CLI::IsMember(series_names()));
  se->add_option("--order", order)->capture_default_str();

  auto* ch = app.add_subcommand("chains", "Chain counting reports");
  ch->add_option("report", name)->required()->check(CLI::IsMember({"count", "size-dist", "total-size", "average", "asymptotic"}));
  ch->add_option("--n", n)->required();

  auto* ri = app.add_subcommand("riordan", "Rows of a Riordan array (g, f)");
  ri->add_option("--g", g)->required()->check(CLI::IsMember(series_names()));
  ri->add_option("--f", f)->required()->check(CLI::IsMember(series_names()));
  ri->add_option("--rows", rows)->required();
  ri->add_option("--apply", apply)->check(CLI::IsMember(series_names()));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (!no_banner) err << "butterfly " << kVersion << '\n';
  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  try {
    if (*en) {
      enumerate(name, n, format, out);
      return kPass;
    }
    if (*ve) {
      const auto results = verify(target, n, colors);
      write_results(out, results, format);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
      return ok ? kPass : kFail;
    }
    if (*ta) {
      const Table t = table(name, n);
      write_table(out, t, format);
      return t.passed ? kPass : kFail;
    }
    if (*se) {
      write_series(out, named_series(name, order), format);
      return kPass;
    }
    if (*ch) {
      const Table t = chains_table(name, n);
      write_table(out, t, format);
      return t.passed ? kPass : kFail;
    }
    if (*ri) {
      riordan(g, f, rows, apply, format, out);
      return kPass;
    }
  } catch (const ExactnessError& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace butterfly::cli
