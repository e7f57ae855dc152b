#include "ksq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ksq {

namespace {

constexpr double kProjectorTol = 1e-12;
constexpr double kStateTol = 1e-10;
constexpr double kOrthoTol = 1e-9;

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Projector Projector::from_matrix(ComplexMatrix m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("projector matrix must be square");
    if (max_abs(m - m.adjoint()) > kProjectorTol)
        throw std::invalid_argument("projector matrix is not Hermitian");
    if (max_abs(m * m - m) > kProjectorTol)
        throw std::invalid_argument("projector matrix is not idempotent");
    if (std::abs(m.trace() - std::complex<double>(1.0)) > kProjectorTol)
        throw std::invalid_argument("projector is not rank one (trace != 1)");
    return Projector(std::move(m));
}

Projector projector_from_vector(const ComplexVector& v) {
    double norm = v.norm();
    if (norm < 1e-300)
        throw std::invalid_argument("cannot build a projector from a zero vector");
    ComplexVector unit = v / norm;
    return Projector::from_matrix(unit * unit.adjoint());
}

QuantumState QuantumState::density(ComplexMatrix rho) {
    if (rho.rows() != rho.cols() || rho.rows() == 0)
        throw std::invalid_argument("density matrix must be square");
    if (max_abs(rho - rho.adjoint()) > kStateTol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace() - std::complex<double>(1.0)) > kStateTol)
        throw std::invalid_argument("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho);
    if (eig.eigenvalues().minCoeff() < -kStateTol)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    return QuantumState(std::move(rho));
}

QuantumState QuantumState::pure(const ComplexVector& psi) {
    double norm = psi.norm();
    if (norm < 1e-300)
        throw std::invalid_argument("cannot build a state from a zero vector");
    ComplexVector unit = psi / norm;
    return QuantumState(unit * unit.adjoint());
}

QuantumState QuantumState::maximally_mixed(int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    return QuantumState(ComplexMatrix::Identity(dimension, dimension) /
                        static_cast<double>(dimension));
}

std::vector<Projector> projectors_from_vectors(
    const std::vector<ComplexVector>& vectors) {
    std::vector<Projector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(projector_from_vector(v));
    return out;
}

namespace {

// Plain Bron-Kerbosch; vertex sets stay sorted so the recursion visits
// candidates in ascending order and output is deterministic.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj,
                   std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& cliques) {
    if (p.empty() && x.empty()) {
        if (r.size() >= 2) cliques.push_back(r);
        return;
    }
    while (!p.empty()) {
        int v = p.front();
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[v][u]) np.push_back(u);
        for (int u : x)
            if (adj[v][u]) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(np), std::move(nx), cliques);
        r.pop_back();
        p.erase(p.begin());
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

Scenario derive_scenario(const std::vector<ComplexVector>& vectors,
                         std::string name) {
    const int n = static_cast<int>(vectors.size());
    if (n == 0) throw std::invalid_argument("derive_scenario: no vectors");
    const int d = static_cast<int>(vectors.front().size());
    std::vector<ComplexVector> unit;
    unit.reserve(n);
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("derive_scenario: mixed vector dimensions");
        double norm = v.norm();
        if (norm < 1e-300)
            throw std::invalid_argument("derive_scenario: zero vector");
        unit.push_back(v / norm);
    }

    std::vector adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(unit[i].dot(unit[j])) < kOrthoTol)
                adj[i][j] = adj[j][i] = true;

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    bron_kerbosch(adj, r, all, {}, cliques);
    std::sort(cliques.begin(), cliques.end());

    const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
    std::vector<Context> contexts;
    contexts.reserve(cliques.size());
    for (auto& members : cliques) {
        if (static_cast<int>(members.size()) > d)
            throw std::logic_error(
                "derive_scenario: near-degenerate vectors produced a context "
                "larger than the dimension");
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        for (int i : members) sum += unit[i] * unit[i].adjoint();
        bool complete = max_abs(sum - identity) < kOrthoTol;
        contexts.push_back({std::move(members), complete});
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("A" + std::to_string(i + 1));
    return Scenario(std::move(name), std::move(labels), std::move(contexts));
}

EventProbabilities born_probabilities(const QuantumState& state,
                                      const std::vector<Projector>& projectors) {
    std::vector<double> p;
    p.reserve(projectors.size());
    for (const Projector& proj : projectors) {
        if (proj.dimension() != state.dimension())
            throw std::invalid_argument("projector/state dimension mismatch");
        std::complex<double> tr = (state.rho() * proj.matrix()).trace();
        if (std::abs(tr.imag()) > kStateTol)
            throw std::invalid_argument("Born probability has imaginary part");
        p.push_back(std::clamp(tr.real(), 0.0, 1.0));
    }
    return EventProbabilities::from_doubles(std::move(p));
}

}  // namespace ksq
