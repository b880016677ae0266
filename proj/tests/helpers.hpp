#ifndef PGROW_TEST_HELPERS_HPP
#define PGROW_TEST_HELPERS_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "pgrow/family.hpp"
#include "pgrow/grid.hpp"

namespace pgtest {

inline pgrow::GridSpec default_grid() { return pgrow::GridSpec(1.0, 1e4, 4096); }

// Family built from plain lambdas, for one-off test functions.
inline pgrow::AnalyticFamily adhoc(const std::string& name,
                                   std::function<double(double)> eval,
                                   std::function<double(double)> dlog = {},
                                   double lo = -1e300, double hi = 1e300) {
    pgrow::AnalyticFamily f;
    f.name = name;
    f.eval = std::move(eval);
    f.dlog = std::move(dlog);
    f.domain_lo = lo;
    f.domain_hi = hi;
    return f;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = std::string(P_tmpdir) + "/pgrow_test_" + name;
    }
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream out(path);
        out << content;
    }
};

// O(n^2) gift-wrapping upper hull, an independent check of the production
// monotone-chain scan.
inline std::vector<double> hull_oracle(const std::vector<double>& s,
                                       const std::vector<double>& v) {
    const std::size_t n = s.size();
    std::vector<std::size_t> vertices{0};
    std::size_t cur = 0;
    while (cur + 1 < n) {
        std::size_t best = cur + 1;
        double best_slope = (v[cur + 1] - v[cur]) / (s[cur + 1] - s[cur]);
        for (std::size_t j = cur + 2; j < n; ++j) {
            const double slope = (v[j] - v[cur]) / (s[j] - s[cur]);
            if (slope > best_slope || (slope == best_slope && j > best)) {
                best_slope = slope;
                best = j;
            }
        }
        vertices.push_back(best);
        cur = best;
    }
    std::vector<double> env(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (seg + 2 < vertices.size() && s[vertices[seg + 1]] <= s[i]) ++seg;
        const std::size_t a = vertices[seg], b = vertices[seg + 1 < vertices.size() ? seg + 1 : seg];
        if (b == a || i == a || i == b) {
            env[i] = v[i == b ? b : a];
            continue;
        }
        env[i] = v[a] + (v[b] - v[a]) * (s[i] - s[a]) / (s[b] - s[a]);
    }
    return env;
}

} // namespace pgtest

#endif
