#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ramify/group.hpp"

namespace ramify {

using IntMatrix = std::vector<std::vector<long long>>;
using IntVector = std::vector<long long>;

/// Data for N x_{Phi,Theta} Q with N, Q abelian (products of cyclic groups).
///
/// phi[i] is the matrix of Phi on the i-th basis vector of Q, acting on
/// column vectors of N. theta[i][j] is Theta(e_i, e_j); missing entries are 0.
struct MetabelianData {
  std::vector<unsigned> n_invariants;
  std::vector<unsigned> q_invariants;
  std::vector<IntMatrix> phi;
  std::vector<std::vector<IntVector>> theta;
};

/// Group on N x Q with (n1,q1)(n2,q2) = (n1 + Phi_q1(n2) + Theta(q1,q2), q1 + q2).
/// Element (n, q) has index metabelian_index(data, n, q); labels look like
/// "(0101;1)". Throws InvalidConstruction if Phi is not a homomorphism into
/// Aut(N), Theta is not bilinear, or Phi_q1(Theta(q2,q3)) != Theta(q2,q3).
GroupTable metabelian(const MetabelianData& data, std::string label = {},
                      std::size_t order_bound = kDefaultOrderBound);

Elem metabelian_index(const MetabelianData& data, std::span<const long long> n,
                      std::span<const long long> q);

}  // namespace ramify
