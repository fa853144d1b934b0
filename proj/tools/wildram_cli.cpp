// Command-line front door: reads cover descriptions (file or stdin), runs
// one operation through the C interface, prints a JSON report (default) or
// a terse table. Exit codes: 0 ok, 1 domain, 2 precision, 3 parse,
// 4 internal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wildram.h"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::printf("{\"kind\":\"Parse\",\"message\":\"cannot open %s\"}\n",
                path.c_str());
    std::exit(3);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The --precision flag wins over a "precision" field in the file.
std::string with_precision(const std::string& text, long precision) {
  if (precision <= 0) return text;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return text;  // API reports the error
  j["precision"] = precision;
  return j.dump();
}

void print_chain_table(const json& j) {
  std::printf("different %ld\n", j["different"].get<long>());
  for (const auto& s : j["steps"])
    std::printf("  G_%ld..  order %ld\n", s["from"].get<long>(),
                s["order"].get<long>());
  for (const auto& jp : j["jumps"]) {
    std::printf("  j(");
    const auto& sig = jp["sigma"];
    for (size_t i = 0; i < sig.size(); ++i)
      std::printf("%s%d", i ? "," : "", sig[i].get<int>());
    std::printf(") = %ld\n", jp["j"].get<long>());
  }
}

void print_lines_table(const json& lines) {
  for (const auto& ln : lines) {
    std::printf("  (");
    const auto& c = ln["coeffs"];
    for (size_t i = 0; i < c.size(); ++i)
      std::printf("%s%d", i ? "," : "", c[i].get<int>());
    std::printf(") break %ld\n", ln["break"].get<long>());
  }
}

void print_table(const std::string& cmd, const json& j) {
  if (cmd == "validate") {
    std::printf("%s\n", j["ok"].get<bool>() ? "valid" : "invalid");
    print_lines_table(j["lines"]);
    for (const auto& f : j["failures"]) {
      std::printf("  combo (");
      const auto& c = f["coeffs"];
      for (size_t i = 0; i < c.size(); ++i)
        std::printf("%s%d", i ? "," : "", c[i].get<int>());
      std::printf(") is %s\n", f["status"].get<std::string>().c_str());
    }
  } else if (cmd == "breaks") {
    print_lines_table(j["lines"]);
  } else if (cmd == "filtration" || cmd == "restrict" || cmd == "quotient") {
    print_chain_table(j);
  } else if (cmd == "different") {
    std::printf("hilbert %ld", j["hilbert"].get<long>());
    if (!j["derivative"].is_null())
      std::printf("  derivative %ld  agree %s", j["derivative"].get<long>(),
                  j["agree"].get<bool>() ? "yes" : "no");
    std::printf("\n");
  } else if (cmd == "transitivity") {
    for (const auto& c : j["checks"])
      std::printf("  dim %d: %ld = %ld %s\n", c["h"]["dim"].get<int>(),
                  c["lhs"].get<long>(), c["rhs"].get<long>(),
                  c["agree"].get<bool>() ? "ok" : "MISMATCH");
  } else if (cmd == "sweep") {
    for (const auto& c : j["criteria"]) {
      std::printf("%s  criterion %2d  %-26s (%ld checks)\n",
                  c["pass"].get<bool>() ? "PASS" : "FAIL", c["id"].get<int>(),
                  c["name"].get<std::string>().c_str(),
                  c["checks"].get<long>());
      for (const auto& f : c["failures"])
        std::printf("        %s\n", f.get<std::string>().c_str());
    }
    std::printf("%s\n", j["all_pass"].get<bool>() ? "all criteria pass"
                                                  : "FAILURES PRESENT");
  } else {
    std::printf("%s\n", j.dump(2).c_str());
  }
}

int emit(const std::string& cmd, wr_status st, char* out, bool table) {
  if (out) {
    if (st == WR_OK && table)
      print_table(cmd, json::parse(std::string(out)));
    else
      std::printf("%s\n", out);
    wr_string_free(out);
  }
  return static_cast<int>(st);
}

struct Opened {
  wr_tower* t = nullptr;
  explicit Opened(wr_tower* h) : t(h) {}
  ~Opened() { wr_tower_close(t); }
};

// Opens the cover or prints the error payload and exits.
wr_tower* open_or_die(const std::string& path, long precision) {
  wr_tower* t = nullptr;
  char* err = nullptr;
  wr_status st =
      wr_tower_open(with_precision(read_input(path), precision).c_str(), &t, &err);
  if (st != WR_OK) {
    if (err) std::printf("%s\n", err);
    wr_string_free(err);
    std::exit(static_cast<int>(st));
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wild ramification laboratory for Artin-Schreier covers of "
               "F_q((x))"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --precision and friends follow the subcommand

  long precision = 0;
  bool table = false;
  bool json_mode = true;  // default; --table switches the rendering
  unsigned long long seed = 12022;
  app.add_option("--precision", precision,
                 "truncation window (overrides the description's)");
  app.add_flag("--json", json_mode, "machine-readable output (default)");
  app.add_flag("--table", table, "human-readable output");
  app.add_option("--seed", seed, "seed for randomized sweep checks");

  std::string input = "-";
  std::string input2;
  std::string subgroup;
  std::string series;
  int p = 2, e = 1;
  long index = 0, n = 1, degree = 1;
  std::vector<long> differents;
  int samples = 0;

  int code = 0;
  auto run = [&](const std::string& cmd, wr_status st, char* out) {
    code = emit(cmd, st, out, table);
  };

  auto* validate = app.add_subcommand("validate", "check total ramification");
  validate->add_option("input", input, "cover description file, - for stdin");
  validate->callback([&] {
    char* out = nullptr;
    wr_status st =
        wr_validate(with_precision(read_input(input), precision).c_str(), &out);
    run("validate", st, out);
  });

  auto* reduce = app.add_subcommand("reduce", "normal form of one series");
  reduce->add_option("series", series, "right-hand side, e.g. \"x^-4 + x^-1\"")
      ->required();
  reduce->add_option("--p", p, "characteristic")->required();
  reduce->add_option("--e", e, "residue degree");
  reduce->callback([&] {
    char* out = nullptr;
    wr_status st = wr_reduce(p, e, series.c_str(), &out);
    run("reduce", st, out);
  });

  auto add_cover_cmd = [&](const char* name, const char* desc,
                           auto&& fn) -> CLI::App* {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("input", input, "cover description file, - for stdin");
    sub->callback([&, name, fn] {
      Opened h(open_or_die(input, precision));
      char* out = nullptr;
      wr_status st = fn(h.t, &out);
      run(name, st, out);
    });
    return sub;
  };

  add_cover_cmd("breaks", "line breaks of the cover", wr_breaks);
  add_cover_cmd("filtration", "lower-numbering ramification chain",
                wr_filtration);
  add_cover_cmd("different", "exponent of the different, both routes",
                wr_different);
  add_cover_cmd("g2", "the group at index two, with oracle cross-check",
                wr_g2);
  add_cover_cmd("jump2", "is there a jump at index two", wr_jump_at_two);
  add_cover_cmd("transitivity", "different transitivity over every subgroup",
                wr_transitivity);
  add_cover_cmd("uniformizer", "certified uniformizer and x-expansion",
                wr_uniformizer);

  auto* restr = add_cover_cmd(
      "restrict", "chain restricted to a subgroup",
      [&](const wr_tower* t, char** out) {
        return wr_restrict_filtration(t, subgroup.c_str(), out);
      });
  restr->add_option("--subgroup", subgroup, "basis rows, e.g. [[0,1]]")
      ->required();

  auto* quot = add_cover_cmd("quotient", "chain of the quotient at an index",
                             [&](const wr_tower* t, char** out) {
                               return wr_quotient_filtration(t, index, out);
                             });
  quot->add_option("--index", index, "chain index j")->required();

  auto* kw = add_cover_cmd("kill-wild", "pass to the fixed cover of N",
                           [&](const wr_tower* t, char** out) {
                             return wr_kill_wild(t, subgroup.c_str(), out);
                           });
  kw->add_option("--subgroup", subgroup, "basis rows of N")->required();

  auto* pull = add_cover_cmd("tame-pullback", "pull back along x = u^n",
                             [&](const wr_tower* t, char** out) {
                               return wr_tame_pullback(t, n, out);
                             });
  pull->add_option("--n", n, "tame degree, coprime to p")->required();

  auto* comp = app.add_subcommand("compose", "compositum of two covers");
  comp->add_option("first", input, "first cover description")->required();
  comp->add_option("second", input2, "second cover description")->required();
  comp->callback([&] {
    Opened a(open_or_die(input, precision));
    Opened b(open_or_die(input2, precision));
    char* out = nullptr;
    wr_status st = wr_compose(a.t, b.t, &out);
    run("compose", st, out);
  });

  auto* genus = app.add_subcommand("genus", "genus from degree and differents");
  genus->add_option("--degree", degree, "covering degree")->required();
  genus->add_option("--different", differents, "branch different (repeatable)");
  genus->callback([&] {
    char* out = nullptr;
    wr_status st = wr_genus(degree, differents.data(), differents.size(), &out);
    run("genus", st, out);
  });

  auto* sweep = app.add_subcommand("sweep", "run the full acceptance grid");
  sweep->add_option("--samples", samples, "displacement samples per cover");
  sweep->callback([&] {
    char* out = nullptr;
    wr_status st = wr_sweep(seed, precision > 0 ? precision : 0, samples, &out);
    run("sweep", st, out);
  });

  CLI11_PARSE(app, argc, argv);
  return code;
}
