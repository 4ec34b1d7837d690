#pragma once

#include <string>
#include <vector>
#include <sstream>

namespace fuscat {

// Grothendieck-ring skeleton: labels, unit, dual involution and the
// multiplicity tensor N^i_{jk} = dim Hom(X_i, X_j (x) X_k).
struct FusionRing {
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::vector<int> mult;   // flattened [i][j][k]

    int size() const { return static_cast<int>(labels.size()); }

    int N(int i, int j, int k) const {
        int L = size();
        return mult[(i * L + j) * L + k];
    }
    int& N(int i, int j, int k) {
        int L = size();
        return mult[(i * L + j) * L + k];
    }

    static FusionRing make(std::vector<std::string> labels, int unit,
                           std::vector<int> dual) {
        FusionRing r;
        r.labels = std::move(labels);
        r.unit = unit;
        r.dual = std::move(dual);
        r.mult.assign(static_cast<size_t>(r.size()) * r.size() * r.size(), 0);
        return r;
    }
};

struct Violation {
    std::string what;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string w) { violations.push_back({std::move(w)}); }
};

inline ValidationReport validate_ring(const FusionRing& r) {
    ValidationReport rep;
    int L = r.size();
    auto idx = [&](int i) { return std::to_string(i); };

    if (r.unit < 0 || r.unit >= L) {
        rep.add("unit index out of range");
        return rep;
    }
    if (static_cast<int>(r.dual.size()) != L) {
        rep.add("dual vector size mismatch");
        return rep;
    }
    for (int i = 0; i < L; ++i) {
        if (r.dual[i] < 0 || r.dual[i] >= L) {
            rep.add("dual index out of range at " + idx(i));
            return rep;
        }
    }
    for (int i = 0; i < L; ++i)
        if (r.dual[r.dual[i]] != i)
            rep.add("dual not an involution at label " + idx(i));
    if (r.dual[r.unit] != r.unit) rep.add("dual(unit) != unit");

    for (int i = 0; i < L; ++i)
        for (int k = 0; k < L; ++k) {
            if (r.N(i, r.unit, k) != (i == k ? 1 : 0))
                rep.add("unit constraint N^" + idx(i) + "_{1," + idx(k) + "} violated");
            if (r.N(i, k, r.unit) != (i == k ? 1 : 0))
                rep.add("unit constraint N^" + idx(i) + "_{" + idx(k) + ",1} violated");
        }
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < L; ++k)
            if (r.N(r.unit, j, k) != (k == r.dual[j] ? 1 : 0))
                rep.add("duality constraint N^1_{" + idx(j) + "," + idx(k) + "} violated");

    // associativity: sum_m N^m_{jk} N^i_{ml} = sum_n N^n_{kl} N^i_{jn}
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                for (int l = 0; l < L; ++l) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < L; ++m) lhs += long(r.N(m, j, k)) * r.N(i, m, l);
                    for (int n = 0; n < L; ++n) rhs += long(r.N(n, k, l)) * r.N(i, j, n);
                    if (lhs != rhs)
                        rep.add("associativity fails at (" + idx(i) + "," + idx(j) + "," +
                                idx(k) + "," + idx(l) + ")");
                }
    // symmetry N^i_{jk} = N^k_{j,i*}
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                if (r.N(i, j, k) != r.N(k, j, r.dual[i]))
                    rep.add("Frobenius symmetry fails at (" + idx(i) + "," + idx(j) + "," +
                            idx(k) + ")");
    return rep;
}

} // namespace fuscat
