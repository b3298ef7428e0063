#include "hornplay/check.hpp"

namespace hornplay {

namespace {

// Preorder walk; the fresh counter advances exactly as in proof extraction,
// so both sides standardize each node's clause to the same names.
Verdict check_node(const Theory& theory, const Proof& node, std::vector<int>& path,
                   int& counter) {
    auto reject = [&](const char* reason) {
        return Verdict{false, reason, path};
    };

    if (node.clause_id < 0 || node.clause_id >= static_cast<int>(theory.clauses.size()))
        return reject("bad-clause-id");

    Clause clause = standardize_apart(theory.clauses[node.clause_id], counter);
    if (node.subproofs.size() != clause.body.size()) return reject("arity-mismatch");

    if (apply_subst(node.binding, clause.head) != apply_subst(node.binding, node.goal))
        return reject("head-mismatch");

    for (std::size_t i = 0; i < clause.body.size(); ++i) {
        if (node.subproofs[i].goal != apply_subst(node.binding, clause.body[i])) {
            path.push_back(static_cast<int>(i));
            return reject("body-mismatch");
        }
        path.push_back(static_cast<int>(i));
        Verdict v = check_node(theory, node.subproofs[i], path, counter);
        if (!v.accepted) return v;
        path.pop_back();
    }
    return Verdict::ok();
}

}  // namespace

Verdict check_proof(const Theory& theory, const Atom& claimed_goal, const Proof& proof) {
    if (!alpha_equivalent(proof.goal, claimed_goal))
        return Verdict{false, "goal-mismatch", {}};
    std::vector<int> path;
    int counter = 0;
    return check_node(theory, proof, path, counter);
}

}  // namespace hornplay
