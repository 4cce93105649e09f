#include "grasswt/json_io.hpp"

namespace grasswt {

ordered_json element_json(const Field& F, uint8_t rank) {
    return ordered_json(F.element(rank).coeffs());
}

ordered_json vector_json(const Field& F, const std::vector<uint8_t>& v) {
    ordered_json out = ordered_json::array();
    for (uint8_t x : v) out.push_back(element_json(F, x));
    return out;
}

ordered_json matrix_json(const FMatrix& M) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < M.rows; ++i)
        out.push_back(vector_json(*M.f, {M.row(i), M.row(i) + M.cols}));
    return out;
}

ordered_json subspace_json(const Subspace& S) {
    return ordered_json{{"dim", S.dim()}, {"ambient", S.ambient()}, {"basis", matrix_json(S.basis)}};
}

ordered_json close_witness_json(const Field& F, const CloseWitness& w) {
    ordered_json out;
    out["kind"] = close_kind_name(w.kind);
    out["label"] = close_kind_name(w.label());
    out["dim"] = w.dim;
    if (w.kind == CloseKind::NotDecomposable) {
        out["counterexample"] = vector_json(F, w.counterexample);
    } else {
        out["first"] = matrix_json(w.first);
        out["second"] = matrix_json(w.second);
    }
    return out;
}

ordered_json check_json(const Check& c) {
    ordered_json out;
    out["name"] = c.name;
    out["r"] = c.r;
    out["expected"] = c.expected ? ordered_json(*c.expected) : ordered_json(nullptr);
    out["computed"] = c.computed ? ordered_json(*c.computed) : ordered_json(nullptr);
    out["status"] = check_status_name(c.status);
    if (!c.note.empty()) out["note"] = c.note;
    if (c.witness) out["witness"] = matrix_json(*c.witness);
    out["visited"] = c.visited;
    out["runtime_ms"] = c.runtime_ms;
    return out;
}

ordered_json verify_json(const VerifyReport& rep) {
    ordered_json out;
    out["params"] = ordered_json{{"l", rep.l},         {"m", rep.m},   {"q", rep.q},
                                 {"n", rep.n},         {"k", rep.k},   {"delta", rep.delta},
                                 {"mu", rep.mu}};
    out["checks"] = ordered_json::array();
    for (const Check& c : rep.checks) out["checks"].push_back(check_json(c));
    int passed = 0, failed = 0, skipped = 0;
    for (const Check& c : rep.checks) {
        passed += c.status == CheckStatus::Pass;
        failed += c.status == CheckStatus::Fail;
        skipped += c.status == CheckStatus::Skipped;
    }
    out["summary"] =
        ordered_json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    return out;
}

ordered_json conjecture_row_json(const ConjectureRow& row) {
    auto opt = [](const std::optional<uint64_t>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    ordered_json out;
    out["r"] = row.r;
    out["primal_value"] = row.primal_value;
    out["dual_value"] = row.dual_value;
    out["label"] = row.label;
    out["exact_primal"] = opt(row.exact_primal);
    out["exact_dual"] = opt(row.exact_dual);
    out["witness_norm"] = opt(row.witness_norm);
    out["witness_points"] = opt(row.witness_points);
    out["witness_decomposables"] = opt(row.witness_decomposables);
    out["bound_griesmer_wei"] = row.bound_griesmer_wei;
    out["bound_generalized"] = opt(row.bound_generalized);
    out["note"] = row.note;
    out["visited"] = row.visited;
    out["runtime_ms"] = row.runtime_ms;
    return out;
}

ordered_json conjecture_json(const ConjectureReport& rep) {
    ordered_json out;
    out["params"] =
        ordered_json{{"m", rep.m}, {"q", rep.q}, {"r_lo", rep.r_lo}, {"r_hi", rep.r_hi}};
    out["rows"] = ordered_json::array();
    for (const ConjectureRow& row : rep.rows) out["rows"].push_back(conjecture_row_json(row));
    out["note"] = rep.note;
    int refuted = 0, unresolved = 0;
    for (const ConjectureRow& row : rep.rows) {
        refuted += row.label == "REFUTED";
        unresolved += row.label == "UNRESOLVED";
    }
    out["summary"] = ordered_json{{"refuted", refuted}, {"unresolved", unresolved}};
    return out;
}

void strip_runtime(ordered_json& j) {
    if (j.is_object()) {
        j.erase("runtime_ms");
        for (auto& [key, val] : j.items()) strip_runtime(val);
    } else if (j.is_array()) {
        for (auto& val : j) strip_runtime(val);
    }
}

} // namespace grasswt
