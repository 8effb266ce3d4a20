#include "ramify/metabelian.hpp"

#include "ramify/error.hpp"

namespace ramify {

namespace {

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

struct Radix {
  std::vector<unsigned> base;
  std::size_t size() const {
    std::size_t s = 1;
    for (unsigned b : base) s *= b;
    return s;
  }
  IntVector decode(std::size_t idx) const {
    IntVector v(base.size());
    for (std::size_t i = base.size(); i-- > 0;) {
      v[i] = static_cast<long long>(idx % base[i]);
      idx /= base[i];
    }
    return v;
  }
  std::size_t encode(std::span<const long long> v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < base.size(); ++i) idx = idx * base[i] + static_cast<std::size_t>(mod(v[i], base[i]));
    return idx;
  }
};

}  // namespace

Elem metabelian_index(const MetabelianData& data, std::span<const long long> n,
                      std::span<const long long> q) {
  if (n.size() != data.n_invariants.size() || q.size() != data.q_invariants.size()) {
    throw IndexOutOfRange("coordinate vector has the wrong length");
  }
  Radix rn{data.n_invariants}, rq{data.q_invariants};
  return static_cast<Elem>(rn.encode(n) * rq.size() + rq.encode(q));
}

GroupTable metabelian(const MetabelianData& data, std::string label, std::size_t order_bound) {
  const std::size_t rn = data.n_invariants.size(), rq = data.q_invariants.size();
  for (unsigned d : data.n_invariants)
    if (d == 0) throw InvalidConstruction("cyclic factor of order 0");
  for (unsigned d : data.q_invariants)
    if (d == 0) throw InvalidConstruction("cyclic factor of order 0");
  Radix N{data.n_invariants}, Q{data.q_invariants};
  const std::size_t n_size = N.size(), q_size = Q.size(), total = n_size * q_size;
  if (total > std::min(order_bound, kMaxOrderBound)) {
    throw BoundExceeded("metabelian: order " + std::to_string(total) + " exceeds bound");
  }
  if (data.phi.size() != rq) throw InvalidConstruction("need one Phi matrix per generator of Q");

  // act[i][x] = Phi_{e_i}(x) on N-indices.
  std::vector<std::vector<std::size_t>> act(rq, std::vector<std::size_t>(n_size));
  for (std::size_t i = 0; i < rq; ++i) {
    const IntMatrix& m = data.phi[i];
    if (m.size() != rn) throw InvalidConstruction("Phi matrix has the wrong size");
    for (std::size_t r = 0; r < rn; ++r) {
      if (m[r].size() != rn) throw InvalidConstruction("Phi matrix has the wrong size");
      for (std::size_t c = 0; c < rn; ++c) {
        if (mod(m[r][c] * data.n_invariants[c], data.n_invariants[r]) != 0) {
          throw InvalidConstruction("Phi matrix does not define an endomorphism of N");
        }
      }
    }
    std::vector<bool> hit(n_size, false);
    for (std::size_t x = 0; x < n_size; ++x) {
      IntVector v = N.decode(x), w(rn, 0);
      for (std::size_t r = 0; r < rn; ++r)
        for (std::size_t c = 0; c < rn; ++c) w[r] += m[r][c] * v[c];
      std::size_t y = N.encode(w);
      if (hit[y]) throw InvalidConstruction("Phi matrix is not invertible on N");
      hit[y] = true;
      act[i][x] = y;
    }
  }
  for (std::size_t i = 0; i < rq; ++i) {
    for (std::size_t x = 0; x < n_size; ++x) {
      std::size_t y = x;
      for (unsigned k = 0; k < data.q_invariants[i]; ++k) y = act[i][y];
      if (y != x) throw InvalidConstruction("Phi is not a homomorphism: order of Phi_e does not divide order of e");
      for (std::size_t j = 0; j < i; ++j) {
        if (act[i][act[j][x]] != act[j][act[i][x]]) throw InvalidConstruction("Phi matrices do not commute");
      }
    }
  }

  std::vector<std::vector<std::size_t>> theta(rq, std::vector<std::size_t>(rq, 0));
  if (!data.theta.empty()) {
    if (data.theta.size() != rq) throw InvalidConstruction("Theta table has the wrong size");
    for (std::size_t i = 0; i < rq; ++i) {
      if (data.theta[i].size() != rq) throw InvalidConstruction("Theta table has the wrong size");
      for (std::size_t j = 0; j < rq; ++j) {
        const IntVector& v = data.theta[i][j];
        if (v.empty()) continue;
        if (v.size() != rn) throw InvalidConstruction("Theta value has the wrong length");
        theta[i][j] = N.encode(v);
        for (std::size_t r = 0; r < rn; ++r) {
          long long d = data.n_invariants[r];
          if (mod(v[r] * data.q_invariants[i], d) != 0 || mod(v[r] * data.q_invariants[j], d) != 0) {
            throw InvalidConstruction("Theta is not bilinear on Q");
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < rq; ++k)
    for (std::size_t i = 0; i < rq; ++i)
      for (std::size_t j = 0; j < rq; ++j) {
        if (act[k][theta[i][j]] != theta[i][j]) {
          throw InvalidConstruction("compatibility fails: Phi_e" + std::to_string(k + 1) + " moves Theta(e" +
                                    std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")");
        }
      }

  auto add = [&](std::size_t a, std::size_t b) {
    IntVector va = N.decode(a), vb = N.decode(b);
    for (std::size_t r = 0; r < rn; ++r) va[r] += vb[r];
    return N.encode(va);
  };
  std::vector<std::vector<std::size_t>> n_add(n_size, std::vector<std::size_t>(n_size));
  for (std::size_t a = 0; a < n_size; ++a)
    for (std::size_t b = 0; b < n_size; ++b) n_add[a][b] = add(a, b);

  // Full Phi_q and Theta(q1,q2) from the basis data.
  std::vector<std::vector<std::size_t>> phi_q(q_size, std::vector<std::size_t>(n_size));
  std::vector<std::vector<std::size_t>> theta_q(q_size, std::vector<std::size_t>(q_size, 0));
  for (std::size_t q = 0; q < q_size; ++q) {
    IntVector qv = Q.decode(q);
    for (std::size_t x = 0; x < n_size; ++x) {
      std::size_t y = x;
      for (std::size_t i = 0; i < rq; ++i)
        for (long long k = 0; k < qv[i]; ++k) y = act[i][y];
      phi_q[q][x] = y;
    }
    for (std::size_t q2 = 0; q2 < q_size; ++q2) {
      IntVector qw = Q.decode(q2);
      std::size_t t = 0;
      for (std::size_t i = 0; i < rq; ++i)
        for (std::size_t j = 0; j < rq; ++j)
          for (long long k = 0; k < qv[i] * qw[j]; ++k) t = n_add[t][theta[i][j]];
      theta_q[q][q2] = t;
    }
  }
  auto q_add = [&](std::size_t a, std::size_t b) {
    IntVector va = Q.decode(a), vb = Q.decode(b);
    for (std::size_t r = 0; r < rq; ++r) va[r] += vb[r];
    return Q.encode(va);
  };

  std::vector<Elem> table(total * total);
  for (std::size_t a = 0; a < total; ++a) {
    std::size_t n1 = a / q_size, q1 = a % q_size;
    for (std::size_t b = 0; b < total; ++b) {
      std::size_t n2 = b / q_size, q2 = b % q_size;
      std::size_t n3 = n_add[n_add[n1][phi_q[q1][n2]]][theta_q[q1][q2]];
      table[a * total + b] = static_cast<Elem>(n3 * q_size + q_add(q1, q2));
    }
  }
  auto digits = [](const IntVector& v) {
    std::string s;
    bool wide = false;
    for (long long x : v) wide |= x > 9;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (wide && i > 0) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::size_t x = 0; x < total; ++x) {
    labels.push_back("(" + digits(N.decode(x / q_size)) + ";" + digits(Q.decode(x % q_size)) + ")");
  }
  std::vector<Elem> gens;
  for (std::size_t r = 0; r < rn; ++r) {
    IntVector v(rn, 0);
    v[r] = 1;
    gens.push_back(static_cast<Elem>(N.encode(v) * q_size));
  }
  for (std::size_t i = 0; i < rq; ++i) {
    IntVector v(rq, 0);
    v[i] = 1;
    gens.push_back(static_cast<Elem>(Q.encode(v)));
  }
  if (label.empty()) label = "metabelian(" + std::to_string(total) + ")";
  return GroupTable::from_cayley(std::move(label), total, std::move(table), std::move(labels), std::move(gens));
}

}  // namespace ramify
