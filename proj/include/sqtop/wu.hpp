#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqtop/steenrod.hpp"

namespace sqtop {

// The degree-i Wu class: the unique v with top(v * x) = top(Sq^i x) for
// every x of complementary degree. Forced to zero when 2i exceeds the
// dimension, with no equations to solve.
struct WuClass {
    int index = 0;
    Gf2Poly cls;
    bool forced_zero = false;
};

WuClass wu_class(const SqEvaluator& ev, int i);
std::vector<WuClass> wu_classes(const SqEvaluator& ev, int max_i);

// w_j = sum_i Sq^i v_{j-i} for j = 0..max_j, each in normal form.
std::vector<Gf2Poly> stiefel_whitney(const SqEvaluator& ev, int max_j);

// k-orientability: every Sq^{2^j} with j < k must vanish into the top
// degree. A coordinate that is constantly 1 gives an unconditional "no"
// with a witness; nonconstant coordinates accumulate as conditions that
// must vanish; otherwise "yes".
struct Verdict {
    enum class Status { Yes, No, Conditional };
    struct Witness {
        int sq_index = 0;
        long long degree = 0;
        Monomial cls;
    };

    int k = 0;
    Status status = Status::Yes;
    std::vector<ParamPoly> conditions;  // canonical order, duplicate-free
    std::optional<Witness> witness;
};

std::string status_name(Verdict::Status s);

Verdict orientability_verdict(const SqEvaluator& ev, int k);

// Largest k whose verdict both adds information (2^{k-1} <= n/2) and is
// evaluable with the available table; 0 when even level 1 is out of reach.
int max_verdict_level(const SqEvaluator& ev);

// Parity constraint: a k-orientable ring with odd Euler characteristic
// must have dimension divisible by 2^{k+1}.
struct ParityRow {
    int k = 0;
    Verdict::Status status = Verdict::Status::Yes;
    bool chi_even = false;
    bool dim_exempt = false;  // dimension divisible by 2^{k+1}
    bool consistent = true;
};

std::vector<ParityRow> parity_rows(const SqEvaluator& ev);

}  // namespace sqtop
