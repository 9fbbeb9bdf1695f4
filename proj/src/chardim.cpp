#include "loewy/chardim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "loewy/parallel.hpp"

namespace loewy {

namespace {

Integer ipow(long base, int exp) {
  Integer r = 1;
  for (int e = 0; e < exp; ++e) r *= base;
  return r;
}

int to_int(const Integer& v) { return v.convert_to<int>(); }

// Product of <w, eps_k - eps_j> over lo <= k < j <= hi.
Integer pairing_product(const Weight& w, int lo, int hi) {
  Integer prod = 1;
  for (int k = lo; k <= hi; ++k) {
    for (int j = k + 1; j <= hi; ++j) prod *= pair(w, k, j);
  }
  return prod;
}

// prod_{lo <= k < j <= hi} (j - k)
Integer superfactorial_span(int lo, int hi) {
  Integer prod = 1;
  for (int k = lo; k <= hi; ++k) {
    for (int j = k + 1; j <= hi; ++j) prod *= (j - k);
  }
  return prod;
}

// beta_0 = (k, k + A) and beta_r = (k + A + (r-1)P, k + A + rP) with
// A = a p^{s'} and P = p^{s'+1}, where q = a p^{s'} + b p^{s'+1}.
WitnessCertificate stride_certificate(RootPair root, const Integer& m, const Integer& q, int k,
                                      long p) {
  const JantzenDecomposition inner = jantzen_decompose(q, p);
  const int A = to_int(inner.a * ipow(p, inner.s));
  const int P = to_int(ipow(p, inner.s + 1));
  WitnessCertificate cert{root, jantzen_decompose(m, p), {k, k + A}, {}};
  for (int r = 1; r <= to_int(inner.b); ++r) {
    cert.betas.push_back({k + A + (r - 1) * P, k + A + r * P});
  }
  return cert;
}

}  // namespace

const char* to_string(ParabolicSide side) { return side == ParabolicSide::I ? "I" : "J"; }

Integer weyl_dim(const Weight& lambda) {
  if (!is_dominant(lambda)) {
    throw std::invalid_argument("weyl_dim: weight " + lambda.to_string() + " is not dominant");
  }
  const int n = lambda.rank();
  const Integer num = pairing_product(lambda + rho(n), 1, n + 1);
  const Integer den = superfactorial_span(1, n + 1);
  if (num % den != 0) throw std::logic_error("weyl_dim: inexact division");
  return num / den;
}

Integer dim_M(const BlockContext& ctx, int i, ParabolicSide side) {
  const int n = ctx.n();
  const Weight nu = ctx.lambda(i) + ctx.rho();
  const int lo = side == ParabolicSide::I ? 1 : 2;
  const int hi = side == ParabolicSide::I ? n : n + 1;
  const Integer num = ipow(ctx.p(), n) * pairing_product(nu, lo, hi);
  const Integer den = superfactorial_span(lo, hi);
  if (num % den != 0) throw std::logic_error("dim_M: inexact division");
  return num / den;
}

bool verify_dim_identity(const BlockContext& ctx, int i, ParabolicSide side) {
  const int n = ctx.n();
  if (side == ParabolicSide::I && (i < 0 || i > n - 1)) {
    throw std::out_of_range("verify_dim_identity: side I needs 0 <= i <= n-1");
  }
  if (side == ParabolicSide::J && (i < 1 || i > n)) {
    throw std::out_of_range("verify_dim_identity: side J needs 1 <= i <= n");
  }
  const int other = side == ParabolicSide::I ? i + 1 : i - 1;
  return dim_M(ctx, i, side) == weyl_dim(ctx.lambda(i)) + weyl_dim(ctx.lambda(other));
}

JantzenDecomposition jantzen_decompose(const Integer& m, long p) {
  if (m <= 0) throw std::invalid_argument("jantzen_decompose: m must be positive");
  if (p < 2) throw std::invalid_argument("jantzen_decompose: p must be >= 2");
  JantzenDecomposition d;
  d.m = m;
  Integer q = m;
  while (q % p == 0) {
    q /= p;
    ++d.s;
  }
  d.a = q % p;
  d.b = q / p;
  return d;
}

std::vector<RootPair> positive_roots(int rank) {
  std::vector<RootPair> roots;
  for (int k = 1; k <= rank + 1; ++k) {
    for (int j = k + 1; j <= rank + 1; ++j) roots.push_back({k, j});
  }
  return roots;
}

std::optional<WitnessCertificate> witness_search(const Weight& nu, RootPair root, long p) {
  const Integer m = pair(nu, root.k, root.j);
  if (m <= 0) return std::nullopt;
  const JantzenDecomposition d = jantzen_decompose(m, p);
  const Integer head = d.a * ipow(p, d.s);
  const Integer step = ipow(p, d.s + 1);
  const auto roots = positive_roots(nu.rank());

  std::optional<RootPair> beta0;
  if (m == head) {
    beta0 = root;
  } else {
    for (const auto& r : roots) {
      if (pair(nu, r.k, r.j) == head) {
        beta0 = r;
        break;
      }
    }
  }
  if (!beta0) return std::nullopt;

  WitnessCertificate cert{root, d, *beta0, {}};
  const int wanted = to_int(d.b);
  for (const auto& r : roots) {
    if (static_cast<int>(cert.betas.size()) == wanted) break;
    if (r != *beta0 && pair(nu, r.k, r.j) == step) cert.betas.push_back(r);
  }
  if (static_cast<int>(cert.betas.size()) != wanted) return std::nullopt;
  return cert;
}

bool certificate_valid(const Weight& nu, const WitnessCertificate& cert, long p) {
  const int top = nu.rank() + 1;
  auto in_range = [top](RootPair r) { return 1 <= r.k && r.k < r.j && r.j <= top; };
  if (!in_range(cert.root) || !in_range(cert.beta0)) return false;
  const auto& d = cert.decomposition;
  if (pair(nu, cert.root.k, cert.root.j) != d.m) return false;
  if (d.a <= 0 || d.a >= p || d.b < 0) return false;
  const Integer ps = ipow(p, d.s);
  if (d.m != d.a * ps + d.b * ps * p) return false;
  if (pair(nu, cert.beta0.k, cert.beta0.j) != d.a * ps) return false;
  if (Integer(cert.betas.size()) != d.b) return false;
  std::set<RootPair> distinct{cert.beta0};
  for (const auto& r : cert.betas) {
    if (!in_range(r) || pair(nu, r.k, r.j) != ps * p) return false;
    if (!distinct.insert(r).second) return false;
  }
  return true;
}

CaseConstruction explicit_witness(const BlockContext& ctx, int i, RootPair root) {
  const int n = ctx.n();
  const long p = ctx.p();
  const int k = root.k;
  const int j = root.j;
  if (k < 1 || k >= j || j > n + 1) throw std::invalid_argument("explicit_witness: bad root");
  const Weight nu = ctx.lambda(i) + ctx.rho();
  const Integer m = pair(nu, k, j);

  // Consecutive simple roots: beta_0 = (b0k, b0j), beta_r = (first + r - 1, first + r).
  auto consecutive = [&](RootPair b0, int first, int count) {
    WitnessCertificate cert{root, jantzen_decompose(m, p), b0, {}};
    for (int r = 1; r <= count; ++r) cert.betas.push_back({first + r - 1, first + r});
    return cert;
  };

  if (i == 0) {
    if (k == 1) return {"1.1", consecutive({1, 2}, 2, j - 2)};
    return {"1.2", stride_certificate(root, m, j - k, k, p)};
  }
  if (i == n) {
    if (j == n + 1) return {"2.1", consecutive({n, n + 1}, k, n - k)};
    return {"2.2", stride_certificate(root, m, j - k, k, p)};
  }
  if (j <= i) return {"3.1", stride_certificate(root, m, j - k, k, p)};
  if (k >= i + 2) return {"3.2", stride_certificate(root, m, j - k, k, p)};
  if (j == i + 1) return {"3.3", consecutive({i, i + 1}, k, i - k)};
  if (k == i + 1) return {"3.4", consecutive({i + 1, i + 2}, i + 2, j - i - 2)};

  // k <= i < i+2 <= j: the pairing is (j - k - 1) p.
  const JantzenDecomposition inner = jantzen_decompose(j - k - 1, p);
  const int A = to_int(inner.a * ipow(p, inner.s));
  const int P = to_int(ipow(p, inner.s + 1));
  const int b = to_int(inner.b);
  WitnessCertificate cert{root, jantzen_decompose(m, p), {}, {}};
  if (k + A >= i + 1) {
    cert.beta0 = {k, k + 1 + A};
    for (int r = 1; r <= b; ++r) cert.betas.push_back({k + 1 + A + (r - 1) * P, k + 1 + A + r * P});
    return {"3.5a", cert};
  }
  cert.beta0 = {k, k + A};
  for (int r = 1; r <= b; ++r) {
    const int lo = k + A + (r - 1) * P;
    const int hi = k + A + r * P;
    if (hi <= i) {
      cert.betas.push_back({lo, hi});
    } else if (lo <= i) {
      cert.betas.push_back({lo, hi + 1});
    } else {
      cert.betas.push_back({lo + 1, hi + 1});
    }
  }
  return {"3.5b", cert};
}

bool SimplicityReport::ok() const {
  return failures.empty() &&
         std::all_of(replays.begin(), replays.end(), [](const CaseReplay& r) { return r.valid; });
}

SimplicityReport check_block_simplicity(const BlockContext& ctx) {
  struct PerIndex {
    std::vector<WitnessCertificate> certificates;
    std::vector<SimplicityFailure> failures;
    std::vector<CaseReplay> replays;
  };
  const auto roots = positive_roots(ctx.n());
  const auto per_index = parallel_map<PerIndex>(
      static_cast<std::size_t>(ctx.n()) + 1, [&](std::size_t idx) {
        const int i = static_cast<int>(idx);
        const Weight nu = ctx.lambda(i) + ctx.rho();
        PerIndex out;
        for (const auto& root : roots) {
          auto cert = witness_search(nu, root, ctx.p());
          if (!cert) {
            out.failures.push_back({i, root, "no witness under the pairing pattern"});
          } else if (!certificate_valid(nu, *cert, ctx.p())) {
            out.failures.push_back({i, root, "search returned an invalid certificate"});
          } else {
            out.certificates.push_back(std::move(*cert));
          }
          auto construction = explicit_witness(ctx, i, root);
          const bool valid = certificate_valid(nu, construction.certificate, ctx.p());
          out.replays.push_back({i, construction.sub_case, std::move(construction.certificate), valid});
        }
        return out;
      });

  SimplicityReport report;
  report.n = ctx.n();
  report.p = ctx.p();
  for (std::size_t idx = 0; idx < per_index.size(); ++idx) {
    for (const auto& c : per_index[idx].certificates) {
      report.certificates.push_back(c);
      report.certificate_index.push_back(static_cast<int>(idx));
    }
    report.failures.insert(report.failures.end(), per_index[idx].failures.begin(),
                           per_index[idx].failures.end());
    report.replays.insert(report.replays.end(), per_index[idx].replays.begin(),
                          per_index[idx].replays.end());
  }
  return report;
}

}  // namespace loewy
