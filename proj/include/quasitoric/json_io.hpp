#ifndef QUASITORIC_JSON_IO_HPP
#define QUASITORIC_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "quasitoric/chordal.hpp"
#include "quasitoric/clique_poset.hpp"
#include "quasitoric/ctfp.hpp"
#include "quasitoric/facial.hpp"
#include "quasitoric/index_set.hpp"
#include "quasitoric/lawrence.hpp"
#include "quasitoric/mle_ips.hpp"
#include "quasitoric/multipartition.hpp"
#include "quasitoric/rational.hpp"
#include "quasitoric/reparam.hpp"

namespace quasitoric {

// Output uses ordered JSON so emitted key order is deterministic; parsing
// accepts any order.
using ojson = nlohmann::ordered_json;

// --- core formats (bit-exact contracts) ------------------------------------
// IndexSet: {"dims":[3,3],"tuples":[[1,1],[1,2],...]}
// Matrix:   {"columns":[[1,1],...],"blocks":[{"rows":[{"label":"a_1",
//            "entries":[1,0,...]},...]},...]}

ojson index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const nlohmann::json& j);
IndexSet load_index_set(const std::string& path);

ojson matrix_to_json(const MultipartitionMatrix& m);
MultipartitionMatrix matrix_from_json(const nlohmann::json& j);

// Counts: JSON array of nonnegative integers or "p/q" strings, aligned to
// lexicographic column order.
RatVec counts_from_json(const nlohmann::json& j);
RatVec load_counts(const std::string& path);
std::vector<double> to_double_vec(const RatVec& v);

// Numeric emission: exact values as canonical rational strings, float
// values as strings with 12 significant digits.
std::string format_double(double x);
ojson rat_vec_to_json(const RatVec& v);
ojson double_vec_to_json(const std::vector<double>& v);

// --- report pieces ----------------------------------------------------------

ojson witness_to_json(const ChordalityWitness& w);
ojson swap_witness_to_json(const SwapWitness& w);
ojson split_to_json(const SplitSpec& spec);
ojson factorization_to_json(const CtfpFactorization& f);
ojson poset_to_json(const CliquePoset& p);
ojson indicator_to_json(const IndicatorCombination& c);
ojson reparam_to_json(const ReparamMatrix& rep);
ojson internal_ctfp_to_json(const InternalCtfpReport& r);
ojson decomposition_to_json(const std::vector<LinearDecompositionStep>& steps,
                            const ReparamMatrix& rep);
ojson lift_to_json(const LawrenceLift& l);
ojson slice_report_to_json(const SliceScanReport& r);

}  // namespace quasitoric

#endif
