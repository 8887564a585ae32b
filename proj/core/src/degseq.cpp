#include "specgraph/degseq.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace specgraph {
namespace {

struct ModeBounds {
    int t1_min;
    int mid_min;
    int tn_min;
};

ModeBounds bounds_for(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::L: return {-4, -1, 0};
        case MatrixKind::Q: return {-5, -2, -1};
        default: throw std::invalid_argument("degree-sequence solver supports L and Q only");
    }
}

// multisets of nonzero values v in [lo, hi] with given sum, square sum and
// maximum length; values enumerated descending so options come out in
// descending lexicographic order
void middle_multisets(int lo, int hi, int sum, int sum_sq, int max_len, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (sum_sq == 0) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    if (max_len <= 0) return;
    // remaining values bounded by the square budget
    for (int v = std::min(hi, sum_sq); v >= lo; --v) {
        if (v == 0) continue;
        if (v * v > sum_sq) continue;
        // quick reachability cut: |sum - v| cannot exceed remaining squares
        if (std::abs(sum - v) > sum_sq - v * v) continue;
        if (!cur.empty() && v > cur.back()) continue; // keep descending order
        cur.push_back(v);
        middle_multisets(lo, hi, sum - v, sum_sq - v * v, max_len - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

DegreeSequence propeller_base_sequence(int n) {
    if (n < 6) throw std::invalid_argument("propeller order is at least 6");
    DegreeSequence d(n, 2);
    d[0] = 5;
    d[n - 1] = 1;
    return d;
}

std::string middle_option_display(const std::vector<int>& option, int n) {
    std::ostringstream os;
    os << "(";
    size_t i = 0;
    while (i < option.size()) {
        size_t j = i;
        while (j < option.size() && option[j] == option[i]) ++j;
        if (i) os << ", ";
        os << option[i] << "^" << (j - i);
        i = j;
    }
    const size_t zeros = n - 2 - option.size();
    if (!option.empty()) os << ", ";
    os << "0^{n-" << (2 + option.size()) << "}"
       << " [n-" << (2 + option.size()) << " = " << zeros << "]";
    os << ")";
    return os.str();
}

DegSeqSolution candidate_degree_sequences(const DegreeSequence& base, MatrixKind kind) {
    const int n = static_cast<int>(base.size());
    if (n < 12)
        throw std::invalid_argument("degree-sequence solver needs n >= 12");
    if (base != propeller_base_sequence(n))
        throw std::invalid_argument("base must be the propeller degree sequence (5, 2^{n-2}, 1)");
    const ModeBounds b = bounds_for(kind);

    DegSeqSolution sol;
    sol.n = n;
    sol.kind = kind;
    std::set<DegreeSequence> seqs;

    for (int a : {0, 5, 8, 9}) {
        int s = 0;
        while (s * s < 9 - a) ++s; // 9 - a is a perfect square for these cases
        std::vector<int> hub_choices{-3 + s};
        if (s != 0) hub_choices.push_back(-3 - s);
        for (int t1 : hub_choices) {
            if (t1 < b.t1_min || 5 + t1 > n - 1) continue;
            for (int tn = b.tn_min; tn * tn - 2 * tn <= a || tn < 2; ++tn) {
                const int ss = a - (tn * tn - 2 * tn);
                if (ss < 0) continue;
                if (1 + tn > n - 1) break;
                DegSeqCaseRow row;
                row.a = a;
                row.t1 = t1;
                row.tn = tn;
                std::vector<int> cur;
                middle_multisets(b.mid_min, 3, -t1 - tn, ss, n - 2, cur, row.middle_options);
                for (const auto& option : row.middle_options) {
                    DegreeSequence d;
                    d.reserve(n);
                    d.push_back(5 + t1);
                    for (int v : option) d.push_back(2 + v);
                    d.insert(d.end(), n - 2 - option.size(), 2);
                    d.push_back(1 + tn);
                    std::sort(d.rbegin(), d.rend());
                    row.sequences.push_back(d);
                    seqs.insert(std::move(d));
                }
                sol.rows.push_back(std::move(row));
            }
        }
    }
    sol.sequences.assign(seqs.begin(), seqs.end());
    return sol;
}

std::optional<long> triangle_feasibility(long base_n3, const DegreeSequence& candidate,
                                         MatrixKind kind) {
    const int n = static_cast<int>(candidate.size());
    const long long cubes_g = degree_power_sum(propeller_base_sequence(n), 3);
    const long long cubes_h = degree_power_sum(candidate, 3);
    long long diff = (kind == MatrixKind::L) ? cubes_h - cubes_g : cubes_g - cubes_h;
    if (kind != MatrixKind::L && kind != MatrixKind::Q)
        throw std::invalid_argument("triangle feasibility supports L and Q only");
    if (diff % 6 != 0) return std::nullopt;
    return base_n3 + diff / 6;
}

} // namespace specgraph
