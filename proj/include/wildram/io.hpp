#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wildram/asred.hpp"
#include "wildram/filtration.hpp"
#include "wildram/inertia.hpp"
#include "wildram/tower.hpp"

namespace wildram {

using json = nlohmann::json;

// On-disk description of a cover: y_i^p - y_i = rhs[i] over F_{p^e}((x)),
// pulled back along x = u^tame_index when tame_index > 1. `precision` is a
// suggested truncation window, not part of the mathematical content.
struct CoverSpecFile {
  int schema = 1;
  int p = 0;
  int e = 1;
  long tame_index = 1;
  std::vector<std::string> rhs;
  std::optional<long> precision;
};

// Strict parser: unknown keys, wrong types and unsupported schema versions
// are ParseErrors. `p` and `rhs` are required, everything else defaults.
CoverSpecFile parse_cover_spec(const std::string& text);

// Builds the tower (validating it) from a parsed description.
Tower open_tower(const CoverSpecFile& s);

CoverSpecFile cover_spec_of(const Tower& t);

// Canonical serialization: alphabetical keys, no insignificant whitespace
// differences, so equal descriptions are byte-identical.
json cover_spec_json(const CoverSpecFile& s);
std::string emit_cover_spec(const CoverSpecFile& s);

// Report builders. Keys are alphabetical (the library's canonical order).
json validation_json(const TowerValidation& v);
json reduce_json(const ReducedRHS& r);
json breaks_json(const Tower& t);
json subspace_json(const Subspace& s);
json filtration_json(const RamificationFiltration& f);
json different_json(const Tower& t);
json g2_json(const Tower& t);
json jump2_json(const Tower& t);
json restrict_json(const Tower& t, const Subspace& H);
json quotient_json(const Tower& t, long j);
json transitivity_json(const Tower& t);
json compose_json(const Tower& x, const Tower& z);
json kill_wild_json(const Tower& t, const Subspace& N);
json tame_pullback_json(const Tower& t, long n);
json uniformizer_json(const Tower& t);
json genus_json(long degree, const std::vector<long>& differents);

// Rows like [[0,1],[1,0]] into a subspace of (Z/p)^l.
Subspace parse_subspace_rows(int p, int l, const json& rows);

// Error payload with a machine-readable kind, and the matching process
// exit code: 1 domain, 2 precision, 3 parse, 4 internal.
json error_json(const std::exception& e);
int exit_code_for(const std::exception& e);

}  // namespace wildram
