#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "ksq/distribution.hpp"
#include "ksq/scenario.hpp"

namespace ksq {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// A rank-one projector |v><v|. Hermitian, idempotent and of unit trace
/// within 1e-12, enforced at construction.
class Projector {
public:
    static Projector from_matrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    int dimension() const { return static_cast<int>(m_.rows()); }

private:
    explicit Projector(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// P = |v><v| / <v|v>. Throws std::invalid_argument on a (near-)zero vector.
Projector projector_from_vector(const ComplexVector& v);

/// A density matrix: Hermitian, unit trace, eigenvalues >= -1e-10.
class QuantumState {
public:
    static QuantumState density(ComplexMatrix rho);
    static QuantumState pure(const ComplexVector& psi);
    static QuantumState maximally_mixed(int dimension);

    const ComplexMatrix& rho() const { return rho_; }
    int dimension() const { return static_cast<int>(rho_.rows()); }

private:
    explicit QuantumState(ComplexMatrix rho) : rho_(std::move(rho)) {}
    ComplexMatrix rho_;
};

std::vector<Projector> projectors_from_vectors(
    const std::vector<ComplexVector>& vectors);

/// Builds the scenario realized by a vector family: contexts are the maximal
/// mutually orthogonal subsets (|<vi|vj>| < 1e-9 on normalized vectors),
/// flagged complete when their projectors sum to the identity within 1e-9 —
/// for rank-one projectors, exactly the subsets of d vectors. Events are
/// labelled "A1".."AN"; contexts are emitted in lexicographic member order.
/// Singleton cliques (vectors orthogonal to nothing) are omitted.
Scenario derive_scenario(const std::vector<ComplexVector>& vectors,
                         std::string name);

/// Born rule p_i = Tr(rho A_i), clamped to [0,1]. Float mode.
EventProbabilities born_probabilities(const QuantumState& state,
                                      const std::vector<Projector>& projectors);

}  // namespace ksq
