#include "wildram/io.hpp"

#include <set>

#include "wildram/errors.hpp"
#include "wildram/uniformizer.hpp"

namespace wildram {

namespace {

long require_int(const json& j, const char* key) {
  if (!j.is_number_integer())
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return j.get<long>();
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

long order_of(int p, int dim) {
  long n = 1;
  for (int i = 0; i < dim; ++i) n *= p;
  return n;
}

}  // namespace

CoverSpecFile parse_cover_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("cover description must be a JSON object");

  static const std::set<std::string> known = {"schema", "p", "e", "tame_index",
                                             "rhs", "precision"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ParseError("unknown field \"" + key + "\"");

  CoverSpecFile out;
  if (j.contains("schema") && require_int(j["schema"], "schema") != 1)
    throw ParseError("unsupported schema version");
  if (!j.contains("p")) throw ParseError("missing field \"p\"");
  out.p = static_cast<int>(require_int(j["p"], "p"));
  if (j.contains("e")) out.e = static_cast<int>(require_int(j["e"], "e"));
  if (j.contains("tame_index"))
    out.tame_index = require_int(j["tame_index"], "tame_index");
  if (!j.contains("rhs")) throw ParseError("missing field \"rhs\"");
  if (!j["rhs"].is_array()) throw ParseError("field \"rhs\" must be an array");
  for (const auto& s : j["rhs"]) {
    if (!s.is_string())
      throw ParseError("field \"rhs\" must be an array of series strings");
    out.rhs.push_back(s.get<std::string>());
  }
  if (j.contains("precision")) {
    long w = require_int(j["precision"], "precision");
    if (w < 1) throw ParseError("field \"precision\" must be positive");
    out.precision = w;
  }
  return out;
}

Tower open_tower(const CoverSpecFile& s) {
  const FqCtx& F = FqCtx::get(s.p, s.e);
  std::vector<LaurentSeries> rhs;
  for (const auto& text : s.rhs) rhs.push_back(parse_series(F, text));
  return Tower(F, std::move(rhs), s.tame_index);
}

CoverSpecFile cover_spec_of(const Tower& t) {
  CoverSpecFile out;
  out.p = t.p();
  out.e = t.field().e();
  out.tame_index = t.tame_index();
  for (const auto& f : t.rhs()) out.rhs.push_back(f.to_string());
  return out;
}

json cover_spec_json(const CoverSpecFile& s) {
  json j;
  j["schema"] = s.schema;
  j["p"] = s.p;
  j["e"] = s.e;
  j["tame_index"] = s.tame_index;
  j["rhs"] = s.rhs;
  if (s.precision) j["precision"] = *s.precision;
  return j;
}

std::string emit_cover_spec(const CoverSpecFile& s) {
  return cover_spec_json(s).dump();
}

json validation_json(const TowerValidation& v) {
  json j;
  j["ok"] = v.ok;
  j["lines"] = json::array();
  for (const auto& ln : v.lines)
    j["lines"].push_back({{"break", ln.break_m}, {"coeffs", vec_json(ln.coeffs)}});
  j["failures"] = json::array();
  for (const auto& f : v.failures)
    j["failures"].push_back(
        {{"coeffs", vec_json(f.coeffs)}, {"status", to_string(f.status)}});
  return j;
}

json reduce_json(const ReducedRHS& r) {
  json j;
  j["status"] = to_string(r.status);
  j["f"] = r.f.to_string();
  j["witness"] = r.witness.to_string();
  if (r.status == RhsStatus::Ramified)
    j["break"] = r.break_m;
  else
    j["break"] = nullptr;
  if (r.status == RhsStatus::Inert)
    j["residual"] = r.f.field().to_string(r.residual);
  else
    j["residual"] = nullptr;
  return j;
}

json breaks_json(const Tower& t) {
  json j;
  j["gen_breaks"] = t.gen_breaks();
  j["lines"] = json::array();
  for (const auto& ln : t.lines())
    j["lines"].push_back({{"break", ln.break_m}, {"coeffs", vec_json(ln.coeffs)}});
  return j;
}

json subspace_json(const Subspace& s) {
  json j;
  j["dim"] = s.dim();
  j["basis"] = json::array();
  for (const auto& row : s.basis()) j["basis"].push_back(vec_json(row));
  return j;
}

json filtration_json(const RamificationFiltration& f) {
  json j;
  j["p"] = f.p();
  j["ambient"] = f.ambient_dim();
  j["different"] = different_hilbert(f);
  j["steps"] = json::array();
  for (const auto& s : f.steps())
    j["steps"].push_back({{"from", s.from},
                          {"order", order_of(f.p(), s.group.dim())},
                          {"group", subspace_json(s.group)}});
  j["jumps"] = json::array();
  for (const auto& [sigma, jv] : f.jumps())
    j["jumps"].push_back({{"j", jv}, {"sigma", vec_json(sigma)}});
  return j;
}

json different_json(const Tower& t) {
  json j;
  long hil = different_hilbert(ramification_filtration(t));
  j["hilbert"] = hil;
  if (t.ell() == 1) {
    long der = different_via_derivative(t);
    j["derivative"] = der;
    j["agree"] = (der == hil);
  } else {
    j["derivative"] = nullptr;
    j["agree"] = nullptr;
  }
  return j;
}

json g2_json(const Tower& t) {
  json j = subspace_json(g2_characterize(t));
  j["agree"] = (g2_characterize(t) == ramification_filtration(t).group_at(2));
  return j;
}

json jump2_json(const Tower& t) {
  json j;
  bool claimed = jump_at_two(t);
  j["jump_at_two"] = claimed;
  auto oracle = ramification_filtration(t);
  bool actual = oracle.group_at(2) != Subspace::full(t.p(), t.ell());
  j["agree"] = (claimed == actual);
  return j;
}

json restrict_json(const Tower& t, const Subspace& H) {
  json j = filtration_json(restrict_filtration(t, H));
  j["h"] = subspace_json(H);
  return j;
}

json quotient_json(const Tower& t, long j_index) {
  json j = filtration_json(quotient_filtration(t, j_index));
  j["chain_index"] = j_index;
  return j;
}

json transitivity_json(const Tower& t) {
  json j;
  j["checks"] = json::array();
  bool all = true;
  for (const auto& H : all_subspaces(t.p(), t.ell())) {
    auto chk = transitivity_check(t, H);
    bool agree = (chk.lhs == chk.rhs);
    all = all && agree;
    j["checks"].push_back({{"agree", agree},
                           {"h", subspace_json(H)},
                           {"lhs", chk.lhs},
                           {"rhs", chk.rhs}});
  }
  j["all_agree"] = all;
  return j;
}

json compose_json(const Tower& x, const Tower& z) {
  auto c = compositum(x, z);
  json j;
  j["cover"] = cover_spec_json(cover_spec_of(c.tower));
  j["span_collapse"] = c.span_collapse;
  return j;
}

json kill_wild_json(const Tower& t, const Subspace& N) {
  auto kw = kill_wild(t, N);
  json j;
  j["cover"] = cover_spec_json(cover_spec_of(kw.tower_z));
  j["relative_inertia"] = subspace_json(kw.relative_inertia);
  return j;
}

json tame_pullback_json(const Tower& t, long n) {
  Tower pb = tame_pullback(t, n);
  json j;
  j["cover"] = cover_spec_json(cover_spec_of(pb));
  return j;
}

json uniformizer_json(const Tower& t) {
  auto u = uniformizer(t);
  json j;
  j["method"] = u.method;
  j["pi"] = u.pi.to_string();
  j["norm_valuation"] = t.norm_valuation(u.pi);
  j["x_expansion"] = x_expansion(t, u.pi).to_string();
  return j;
}

json genus_json(long degree, const std::vector<long>& differents) {
  json j;
  j["genus"] = rh_genus(degree, differents);
  return j;
}

Subspace parse_subspace_rows(int p, int l, const json& rows) {
  if (!rows.is_array()) throw ParseError("subgroup must be an array of rows");
  std::vector<Vec> gens;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("subgroup rows must be arrays");
    Vec v;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw ParseError("subgroup entries must be integers");
      long n = x.get<long>();
      v.push_back(static_cast<int>(((n % p) + p) % p));
    }
    if (static_cast<int>(v.size()) != l)
      throw ParseError("subgroup rows must have length " + std::to_string(l));
    gens.push_back(std::move(v));
  }
  return Subspace::span(p, l, gens);
}

json error_json(const std::exception& e) {
  json j;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    j["kind"] = err->kind();
    j["message"] = err->what();
    if (const auto* pe = dynamic_cast<const PrecisionExhausted*>(&e))
      j["suggested_window"] = pe->suggested_window;
    if (const auto* rs = dynamic_cast<const ResidueSplit*>(&e)) {
      j["level"] = rs->level;
      j["generator"] = rs->generator;
      j["constant"] = rs->constant;
    }
  } else {
    j["kind"] = "Internal";
    j["message"] = e.what();
  }
  return j;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 3;
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return 2;
  if (dynamic_cast<const DomainError*>(&e)) return 1;
  return 4;
}

}  // namespace wildram
