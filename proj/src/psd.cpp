#include "solenoid/psd.hpp"

#include <Eigen/Dense>

namespace solenoid {

bool exact_psd_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != a[j][i]) return false;

    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;

    while (!live.empty()) {
        std::size_t pivot_pos = live.size();
        for (std::size_t t = 0; t < live.size(); ++t) {
            const Rational& d = a[live[t]][live[t]];
            if (d < 0) return false;
            if (d > 0 && (pivot_pos == live.size() || d > a[live[pivot_pos]][live[pivot_pos]]))
                pivot_pos = t;
        }
        if (pivot_pos == live.size()) {
            // zero diagonal: PSD demands the whole remaining block vanish
            for (std::size_t s : live)
                for (std::size_t t : live)
                    if (a[s][t] != 0) return false;
            return true;
        }
        const std::size_t i = live[pivot_pos];
        const Rational d = a[i][i];
        live.erase(live.begin() + pivot_pos);
        for (std::size_t s : live)
            for (std::size_t t : live) a[s][t] -= a[s][i] * a[i][t] / d;
    }
    return true;
}

PsdReport psd_check(const CharFnExpr& f, const std::vector<Rational>& points, double tol) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("psd_check needs at least one point");

    std::vector<std::vector<CFValue>> gram(n, std::vector<CFValue>(n));
    const GroupTag& host = f.host();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            gram[j][k] = f.eval(host.reduce(points[j] - points[k]));

    PsdReport report;

    report.hermitian = true;
    for (std::size_t j = 0; j < n && report.hermitian; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (!CFValue::equal(gram[j][k], gram[k][j].conj(), tol)) {
                report.hermitian = false;
                report.note = "hermitian symmetry fails at (" + std::to_string(j) + "," +
                              std::to_string(k) + ")";
                break;
            }

    Eigen::MatrixXcd m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(j, k) = gram[j][k].approx();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        (m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();

    if (!report.hermitian) {
        report.psd = false;
        return report;
    }

    bool all_rational = true;
    std::vector<std::vector<Rational>> exact(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n && all_rational; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            auto r = gram[j][k].real_rational();
            if (!r) {
                all_rational = false;
                break;
            }
            exact[j][k] = *r;
        }

    if (all_rational) {
        report.exact_path = true;
        report.psd = exact_psd_rational(std::move(exact));
        if (!report.psd) report.note = "rational elimination met a negative pivot";
    } else {
        report.psd = report.min_eigenvalue >= -tol;
        if (!report.psd) report.note = "eigenvalue below -tolerance";
    }
    return report;
}

}  // namespace solenoid
