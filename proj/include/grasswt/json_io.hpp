#pragma once

#include <json.hpp>

#include "grasswt/decomp.hpp"
#include "grasswt/grasscode.hpp"

namespace grasswt {

using ordered_json = nlohmann::ordered_json;

// field elements serialize as coefficient lists [c0, c1, ...], constant
// term first, length e; vectors and matrices nest them
ordered_json element_json(const Field& F, uint8_t rank);
ordered_json vector_json(const Field& F, const std::vector<uint8_t>& v);
ordered_json matrix_json(const FMatrix& M);
ordered_json subspace_json(const Subspace& S);

ordered_json close_witness_json(const Field& F, const CloseWitness& w);
ordered_json check_json(const Check& c);
ordered_json verify_json(const VerifyReport& rep);
ordered_json conjecture_row_json(const ConjectureRow& row);
ordered_json conjecture_json(const ConjectureReport& rep);

// removes every "runtime_ms" key at any depth, for byte-identity checks
void strip_runtime(ordered_json& j);

} // namespace grasswt
