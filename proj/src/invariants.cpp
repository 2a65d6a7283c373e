#include "upknot/invariants.hpp"

#include <algorithm>
#include <utility>

namespace upknot {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate integer Laurent polynomials. All heavy elimination work
// happens here; rational coefficients and half-integer exponents only appear
// at the public boundary. c[k] is the coefficient of T^(lo+k); the vector is
// empty exactly for the zero polynomial and never has zero end coefficients.
// ---------------------------------------------------------------------------
struct DPoly {
  long lo = 0;
  std::vector<mpz_class> c;

  bool is_zero() const { return c.empty(); }
  long hi() const { return lo + static_cast<long>(c.size()) - 1; }
};

void dp_trim(DPoly& p) {
  std::size_t back = p.c.size();
  while (back > 0 && p.c[back - 1] == 0) --back;
  p.c.resize(back);
  std::size_t front = 0;
  while (front < p.c.size() && p.c[front] == 0) ++front;
  if (front > 0) {
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(front));
    p.lo += static_cast<long>(front);
  }
  if (p.c.empty()) p.lo = 0;
}

DPoly dp_const(long v) {
  DPoly p;
  if (v != 0) p.c.emplace_back(v);
  return p;
}

bool dp_is_one(const DPoly& p) { return p.lo == 0 && p.c.size() == 1 && p.c[0] == 1; }

DPoly dp_add(const DPoly& a, const DPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.lo, b.lo);
  long hi = std::max(a.hi(), b.hi());
  DPoly r;
  r.lo = lo;
  r.c.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < a.c.size(); ++k) r.c[a.lo - lo + k] = a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r.c[b.lo - lo + k] += b.c[k];
  dp_trim(r);
  return r;
}

DPoly dp_sub(const DPoly& a, const DPoly& b) {
  if (b.is_zero()) return a;
  long lo = a.is_zero() ? b.lo : std::min(a.lo, b.lo);
  long hi = a.is_zero() ? b.hi() : std::max(a.hi(), b.hi());
  DPoly r;
  r.lo = lo;
  r.c.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < a.c.size(); ++k) r.c[a.lo - lo + k] = a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r.c[b.lo - lo + k] -= b.c[k];
  dp_trim(r);
  return r;
}

DPoly dp_mul(const DPoly& a, const DPoly& b) {
  DPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo = a.lo + b.lo;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
  }
  dp_trim(r);
  return r;
}

// a * k * T^shift
DPoly dp_mul_mono(const DPoly& a, long shift, long k = 1) {
  DPoly r;
  if (a.is_zero() || k == 0) return r;
  r.lo = a.lo + shift;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.emplace_back(x * k);
  return r;
}

// exact division; Bareiss guarantees divisibility, so a remainder means the
// elimination state is corrupt
DPoly dp_exact_div(const DPoly& a, const DPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("dense division by zero");
  if (a.is_zero()) return {};
  if (dp_is_one(b)) return a;
  const long qlo = a.lo - b.lo;
  const long qhi = a.hi() - b.hi();
  if (qhi < qlo) throw NotDivisibleError("dense division: degree mismatch");
  std::vector<mpz_class> rem = a.c;  // indexed by exponent - a.lo
  std::vector<mpz_class> q(static_cast<std::size_t>(qhi - qlo + 1));
  const mpz_class& blead = b.c.back();
  mpz_class qc;
  for (long qe = qhi; qe >= qlo; --qe) {
    mpz_class& rtop = rem[static_cast<std::size_t>(qe + b.hi() - a.lo)];
    if (rtop == 0) continue;
    if (!mpz_divisible_p(rtop.get_mpz_t(), blead.get_mpz_t()))
      throw NotDivisibleError("dense division: leading coefficient not divisible");
    mpz_divexact(qc.get_mpz_t(), rtop.get_mpz_t(), blead.get_mpz_t());
    for (std::size_t t = 0; t < b.c.size(); ++t)
      mpz_submul(rem[static_cast<std::size_t>(qe + b.lo - a.lo) + t].get_mpz_t(),
                 qc.get_mpz_t(), b.c[t].get_mpz_t());
    q[static_cast<std::size_t>(qe - qlo)] = qc;
  }
  for (const auto& x : rem)
    if (x != 0) throw NotDivisibleError("dense division leaves a remainder");
  DPoly r;
  r.lo = qlo;
  r.c = std::move(q);
  dp_trim(r);
  return r;
}

mpz_class dp_eval_one(const DPoly& p) {
  mpz_class s = 0;
  for (const auto& x : p.c) s += x;
  return s;
}

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan (one-step Bareiss on the augmented matrix).
// Every intermediate entry is a minor of the input, so the divisions below
// are exact; checked division turns any violation into a loud error. Returns
// determinant and adjugate.
// ---------------------------------------------------------------------------
template <class T, class Ops>
struct Elimination {
  T det;
  std::vector<T> adj;
};

template <class T, class Ops>
Elimination<T, Ops> ffgj_det_adj(const std::vector<T>& m, int n) {
  if (n == 0) return {Ops::one(), {}};
  const int w = 2 * n;
  std::vector<T> aug(static_cast<std::size_t>(n) * w);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r * w + c] = m[r * n + c];
    aug[r * w + n + r] = Ops::one();
  }
  int sign = 1;
  T prev = Ops::one();
  for (int k = 0; k < n; ++k) {
    if (Ops::is_zero(aug[k * w + k])) {
      int r = k + 1;
      while (r < n && Ops::is_zero(aug[r * w + k])) ++r;
      if (r == n) throw SingularMatrixError("matrix is singular");
      for (int j = 0; j < w; ++j) std::swap(aug[k * w + j], aug[r * w + j]);
      sign = -sign;
    }
    const T piv = aug[k * w + k];
    const bool trivial_prev = Ops::is_one(prev);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const T aik = std::move(aug[i * w + k]);
      aug[i * w + k] = Ops::zero();
      if (Ops::is_zero(aik)) {
        if (!trivial_prev)
          for (int j = 0; j < w; ++j) {
            if (j == k) continue;
            aug[i * w + j] = Ops::div(Ops::mul(piv, aug[i * w + j]), prev);
          }
        else
          for (int j = 0; j < w; ++j) {
            if (j == k) continue;
            aug[i * w + j] = Ops::mul(piv, aug[i * w + j]);
          }
        continue;
      }
      for (int j = 0; j < w; ++j) {
        if (j == k) continue;
        T t = Ops::sub(Ops::mul(piv, aug[i * w + j]), Ops::mul(aik, aug[k * w + j]));
        aug[i * w + j] = trivial_prev ? std::move(t) : Ops::div(t, prev);
      }
    }
    prev = piv;
  }
  Elimination<T, Ops> out;
  out.det = sign < 0 ? Ops::neg(aug[(n - 1) * w + (n - 1)]) : aug[(n - 1) * w + (n - 1)];
  out.adj.resize(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      T v = std::move(aug[r * w + n + c]);
      out.adj[r * n + c] = sign < 0 ? Ops::neg(v) : std::move(v);
    }
  return out;
}

struct DOps {
  static DPoly zero() { return {}; }
  static DPoly one() { return dp_const(1); }
  static bool is_zero(const DPoly& p) { return p.is_zero(); }
  static bool is_one(const DPoly& p) { return dp_is_one(p); }
  static DPoly neg(const DPoly& p) { return dp_mul_mono(p, 0, -1); }
  static DPoly mul(const DPoly& a, const DPoly& b) { return dp_mul(a, b); }
  static DPoly sub(const DPoly& a, const DPoly& b) { return dp_sub(a, b); }
  static DPoly div(const DPoly& a, const DPoly& b) { return dp_exact_div(a, b); }
};

struct LOps {
  static Laurent1 zero() { return Laurent1::zero(); }
  static Laurent1 one() { return Laurent1::constant(1); }
  static bool is_zero(const Laurent1& p) { return p.is_zero(); }
  static bool is_one(const Laurent1& p) { return p == one(); }
  static Laurent1 neg(const Laurent1& p) { return -p; }
  static Laurent1 mul(const Laurent1& a, const Laurent1& b) { return a * b; }
  static Laurent1 sub(const Laurent1& a, const Laurent1& b) { return a - b; }
  static Laurent1 div(const Laurent1& a, const Laurent1& b) { return exact_divide(a, b); }
};

// forward-only Bareiss, when just the determinant is wanted
DPoly dp_bareiss_det(std::vector<DPoly> m, int n) {
  if (n == 0) return dp_const(1);
  int sign = 1;
  DPoly prev = dp_const(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k * n + k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r * n + k].is_zero()) ++r;
      if (r == n) return {};
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
      sign = -sign;
    }
    const DPoly& piv = m[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        DPoly t = dp_sub(dp_mul(piv, m[i * n + j]), dp_mul(m[i * n + k], m[k * n + j]));
        m[i * n + j] = dp_is_one(prev) ? std::move(t) : dp_exact_div(t, prev);
      }
      m[i * n + k] = {};
    }
    prev = piv;
  }
  return dp_mul_mono(m[(n - 1) * n + (n - 1)], 0, sign);
}

// ---------------------------------------------------------------------------
// Structured elimination for a diagram's matrix. With U the unit upper
// bidiagonal part (superdiagonal entry -T^s on each over-in edge, -1 on each
// under-in edge) and W the crossing corrections, A = U - W where W has rank
// at most n. U^-1 is monomial: (U^-1)[p][q] = T^(pw[q]-pw[p]) for p <= q,
// with pw the prefix sums of over-in signs. Pushing U^-1 through the rank-n
// part leaves the n x n core C with C[a][b] = delta - (U^-1)[j_a+1][i_b] *
// (1 - T^(s_b)); then det(A) = det(C) and
//   adj(A) = det(C) U^-1 + (U^-1 P D) adj(C) (Q^T U^-1).
// ---------------------------------------------------------------------------
struct EngineData {
  int n = 0, m = 1;
  std::vector<Crossing> cr;
  std::vector<long> pw;    // 1-based edge index
  DPoly det;
  std::vector<DPoly> adj;  // m x m, row-major, 0-based storage
  long elo = 0, ehi = 0;   // exponent bounds across det and adj entries

  const DPoly& a(int r, int c) const {  // 1-based matrix indices
    return adj[static_cast<std::size_t>(r - 1) * m + (c - 1)];
  }
};

// dense scratch accumulator for sums of shifted polynomials
struct DenseAcc {
  long lo = 0;
  std::vector<mpz_class> c;
  long tmin = 0, tmax = -1;  // touched index range

  void prepare(long lo_, long hi_) {
    lo = lo_;
    std::size_t span = static_cast<std::size_t>(hi_ - lo_ + 1);
    if (c.size() < span) c.resize(span);
    for (long k = tmin; k <= tmax; ++k) c[static_cast<std::size_t>(k)] = 0;
    tmin = 0;
    tmax = -1;
  }

  void add(const DPoly& p, long shift, long k) {
    if (p.is_zero() || k == 0) return;
    long base = p.lo + shift - lo;
    if (base < 0 || base + static_cast<long>(p.c.size()) > static_cast<long>(c.size()))
      throw InternalError("dense accumulator out of range");
    if (tmax < tmin) {
      tmin = base;
      tmax = base + static_cast<long>(p.c.size()) - 1;
    } else {
      tmin = std::min(tmin, base);
      tmax = std::max(tmax, base + static_cast<long>(p.c.size()) - 1);
    }
    if (k == 1) {
      for (std::size_t t = 0; t < p.c.size(); ++t)
        c[base + t] += p.c[t];
    } else if (k == -1) {
      for (std::size_t t = 0; t < p.c.size(); ++t)
        c[base + t] -= p.c[t];
    } else {
      mpz_class kk(k);
      for (std::size_t t = 0; t < p.c.size(); ++t)
        mpz_addmul(c[base + t].get_mpz_t(), kk.get_mpz_t(), p.c[t].get_mpz_t());
    }
  }

  void add_mul(const DPoly& p, const DPoly& q, long shift, long k) {
    if (p.is_zero() || q.is_zero() || k == 0) return;
    add(dp_mul(p, q), shift, k);
  }

  DPoly extract() const {
    DPoly r;
    if (tmax < tmin) return r;
    r.lo = lo + tmin;
    r.c.assign(c.begin() + tmin, c.begin() + tmax + 1);
    dp_trim(r);
    return r;
  }
};

EngineData build_engine(const UprightDiagram& d) {
  EngineData e;
  e.n = d.crossing_count();
  e.m = d.edge_count();
  e.cr = d.crossings();

  e.pw.assign(e.m + 1, 0);
  {
    std::vector<int> over_sign(e.m + 1, 0);
    for (const Crossing& c : e.cr) over_sign[c.over_in] = c.sign;
    for (int k = 1; k < e.m; ++k) e.pw[k + 1] = e.pw[k] + over_sign[k];
  }

  const int n = e.n, m = e.m;

  // core matrix
  std::vector<DPoly> core(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int ja1 = e.cr[a].under_in + 1;
    for (int b = 0; b < n; ++b) {
      const int ib = e.cr[b].over_in;
      const int sb = e.cr[b].sign;
      DPoly v = dp_const(a == b ? 1 : 0);
      if (ja1 <= ib) {
        const long sh = e.pw[ib] - e.pw[ja1];
        DPoly w;  // (T^sh) * (1 - T^sb) = T^sh - T^(sh+sb)
        w.lo = std::min(sh, sh + sb);
        w.c.assign(static_cast<std::size_t>(std::abs(sb)) + 1, 0);
        w.c.front() = (w.lo == sh) ? 1 : -1;
        w.c.back() = (w.lo == sh) ? -1 : 1;
        v = dp_sub(v, w);
      }
      core[static_cast<std::size_t>(a) * n + b] = std::move(v);
    }
  }

  auto elim = ffgj_det_adj<DPoly, DOps>(core, n);
  e.det = std::move(elim.det);
  if (dp_eval_one(e.det) != 1)
    throw InternalError("determinant at T=1 is not 1; elimination is corrupt");

  long pwmin = 0, pwmax = 0;
  for (int k = 1; k <= m; ++k) {
    pwmin = std::min(pwmin, e.pw[k]);
    pwmax = std::max(pwmax, e.pw[k]);
  }
  const long pdmin = pwmin - pwmax, pdmax = pwmax - pwmin;

  long clo = e.det.lo, chi = e.det.hi();
  for (const DPoly& p : elim.adj)
    if (!p.is_zero()) {
      clo = std::min(clo, p.lo);
      chi = std::max(chi, p.hi());
    }

  // mid[c][beta] = sum_{c'} adjC[c][c'] * (Q^T U^-1)[c'][beta]
  std::vector<DPoly> mid(static_cast<std::size_t>(n) * m);
  {
    DenseAcc acc;
    for (int c = 0; c < n; ++c)
      for (int beta = 1; beta <= m; ++beta) {
        acc.prepare(clo + pdmin, chi + pdmax);
        for (int cp = 0; cp < n; ++cp) {
          const int jcp1 = e.cr[cp].under_in + 1;
          if (jcp1 <= beta)
            acc.add(elim.adj[static_cast<std::size_t>(c) * n + cp],
                    e.pw[beta] - e.pw[jcp1], 1);
        }
        mid[static_cast<std::size_t>(c) * m + (beta - 1)] = acc.extract();
      }
  }

  long mlo = clo, mhi = chi;
  for (const DPoly& p : mid)
    if (!p.is_zero()) {
      mlo = std::min(mlo, p.lo);
      mhi = std::max(mhi, p.hi());
    }

  // adj(A)
  e.adj.assign(static_cast<std::size_t>(m) * m, {});
  {
    DenseAcc acc;
    const long alo = std::min(e.det.lo + pdmin, mlo + pdmin - 1);
    const long ahi = std::max(e.det.hi() + pdmax, mhi + pdmax + 1);
    for (int alpha = 1; alpha <= m; ++alpha)
      for (int beta = 1; beta <= m; ++beta) {
        acc.prepare(alo, ahi);
        if (alpha <= beta) acc.add(e.det, e.pw[beta] - e.pw[alpha], 1);
        for (int c = 0; c < n; ++c) {
          const int ic = e.cr[c].over_in;
          if (alpha > ic) continue;
          const DPoly& md = mid[static_cast<std::size_t>(c) * m + (beta - 1)];
          if (md.is_zero()) continue;
          const long sh = e.pw[ic] - e.pw[alpha];
          acc.add(md, sh, 1);
          acc.add(md, sh + e.cr[c].sign, -1);
        }
        e.adj[static_cast<std::size_t>(alpha - 1) * m + (beta - 1)] = acc.extract();
      }
  }

  e.elo = e.det.lo;
  e.ehi = e.det.hi();
  for (const DPoly& p : e.adj)
    if (!p.is_zero()) {
      e.elo = std::min(e.elo, p.lo);
      e.ehi = std::max(e.ehi, p.hi());
    }

  // certify A * adj == det * I using the sparse row structure of A
  {
    std::vector<int> over_at(m + 1, -1);
    for (int c = 0; c < n; ++c) over_at[e.cr[c].over_in] = c;
    DenseAcc acc;
    const long vlo = std::min(e.elo - 1, e.det.lo), vhi = std::max(e.ehi + 1, e.det.hi());
    for (int r = 1; r <= m; ++r) {
      for (int beta = 1; beta <= m; ++beta) {
        acc.prepare(vlo, vhi);
        acc.add(e.a(r, beta), 0, 1);  // diagonal 1 of A
        if (r < m) {
          // superdiagonal: -T^s for an over-in edge, -1 otherwise
          const int co = over_at[r];
          acc.add(e.a(r + 1, beta), co >= 0 ? e.cr[co].sign : 0, -1);
        }
        if (const int co = over_at[r]; co >= 0) {
          const int jc1 = e.cr[co].under_in + 1;
          // -(1 - T^s) at column j+1
          acc.add(e.a(jc1, beta), 0, -1);
          acc.add(e.a(jc1, beta), e.cr[co].sign, 1);
        }
        DPoly got = acc.extract();
        const DPoly& want = (r == beta) ? e.det : DPoly{};
        if (!(got.lo == want.lo && got.c == want.c) && !(got.is_zero() && want.is_zero()))
          throw InternalError("A * adj != det * I at row " + std::to_string(r) +
                              ", column " + std::to_string(beta));
      }
    }
  }

  return e;
}

Laurent1 dp_to_laurent(const DPoly& p, long doubled_shift, bool halve) {
  std::vector<Laurent1::Term> ts;
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (p.c[k] == 0) continue;
    Rational q(p.c[k]);
    if (halve) q /= 2;
    ts.push_back({2 * (p.lo + static_cast<long>(k)) + doubled_shift, std::move(q)});
  }
  return Laurent1::from_terms(std::move(ts));
}

long normalization_doubled_exponent(const UprightDiagram& d) {
  // T^((-rotation-writhe)/2): doubled exponent of the prefactor
  return -d.total_rotation() - d.writhe();
}

// ---------------------------------------------------------------------------
// Dense two-variable accumulator for the theta kernels. Axis placement of a
// univariate polynomial: axis 1 puts T^e at (e, 0), axis 2 at (0, e), axis 3
// (the product variable T3 = T1*T2) at (e, e).
// ---------------------------------------------------------------------------
struct Grid2 {
  long lo1 = 0, lo2 = 0;
  long n1 = 0, n2 = 0;
  std::vector<mpz_class> c;

  void init(long lo1_, long hi1, long lo2_, long hi2) {
    lo1 = lo1_;
    lo2 = lo2_;
    n1 = hi1 - lo1_ + 1;
    n2 = hi2 - lo2_ + 1;
    c.assign(static_cast<std::size_t>(n1) * n2, mpz_class());
  }

  std::size_t index(long e1, long e2) const {
    if (e1 < lo1 || e1 >= lo1 + n1 || e2 < lo2 || e2 >= lo2 + n2)
      throw InternalError("grid index out of range");
    return static_cast<std::size_t>(e1 - lo1) * n2 + static_cast<std::size_t>(e2 - lo2);
  }
};

// grid += w * T1^o1 T2^o2 * p1(axis1) * p2(axis2) * p3(axis3)
void grid_accum_triple(Grid2& g, long w, long o1, long o2, const DPoly& p1,
                       const DPoly& p2, const DPoly& p3) {
  if (w == 0 || p1.is_zero() || p2.is_zero() || p3.is_zero()) return;
  mpz_class tmp;
  for (std::size_t t1 = 0; t1 < p1.c.size(); ++t1) {
    if (p1.c[t1] == 0) continue;
    const long e1 = p1.lo + static_cast<long>(t1);
    for (std::size_t t3 = 0; t3 < p3.c.size(); ++t3) {
      if (p3.c[t3] == 0) continue;
      const long e3 = p3.lo + static_cast<long>(t3);
      mpz_mul(tmp.get_mpz_t(), p1.c[t1].get_mpz_t(), p3.c[t3].get_mpz_t());
      if (w != 1) mpz_mul_si(tmp.get_mpz_t(), tmp.get_mpz_t(), w);
      mpz_class* cell = &g.c[g.index(e1 + e3 + o1, p2.lo + e3 + o2)];
      for (std::size_t t2 = 0; t2 < p2.c.size(); ++t2)
        mpz_addmul(cell[t2].get_mpz_t(), tmp.get_mpz_t(), p2.c[t2].get_mpz_t());
    }
  }
}

// Divide the grid by (T2 - 1) in place (axis 2 synthetic division). The
// remainder of each row is its value at T2 = 1; a nonzero one means the
// two-variable accumulation is not divisible, i.e. the Laurent property
// failed.
void grid_divide_t2_minus_1(Grid2& g) {
  mpz_class acc, t;
  for (long r = 0; r < g.n1; ++r) {
    mpz_class* row = &g.c[static_cast<std::size_t>(r) * g.n2];
    acc = 0;
    for (long k = g.n2 - 1; k >= 0; --k) {
      t = row[k];
      row[k] = acc;
      acc += t;
    }
    if (acc != 0)
      throw NotDivisibleError("two-variable accumulation is not divisible by (T2 - 1)");
  }
}

struct ThetaKernelResult {
  Grid2 grid;  // numerator over 2 * det1 * det2 * det3 after the division
};

void theta_accumulate_crossing(const EngineData& e, const ThetaOptions& opt, int cidx,
                               Grid2& grid_a, Grid2& grid_b) {
  const int s = e.cr[cidx].sign;
  const int i = e.cr[cidx].over_in;
  const int j = e.cr[cidx].under_in;
  const DPoly& D = e.det;
  const DPoly& aii = e.a(i, i);
  const DPoly& ajj = e.a(j, j);
  const DPoly& aji = e.a(j, i);
  const DPoly& aij = e.a(i, j);

  // first bracket, numerators over 2 * det1 * det2 * det3
  grid_accum_triple(grid_a, s, 0, 0, D, D, D);
  grid_accum_triple(grid_a, -2 * s, 0, 0, D, D, aii);
  grid_accum_triple(grid_a, 2 * s, 0, s, aii, aji, D);
  grid_accum_triple(grid_a, -2 * s, 0, s, D, aji, ajj);
  grid_accum_triple(grid_a, -2 * s, 0, s, D, aji, aii);
  grid_accum_triple(grid_a, 2 * s, 0, 0, D, aji, aii);
  grid_accum_triple(grid_a, 2 * s, s, s, D, aji, aji);
  grid_accum_triple(grid_a, -2 * s, 0, 0, D, aji, aji);
  grid_accum_triple(grid_a, -2 * s, 0, 0, aii, ajj, D);
  grid_accum_triple(grid_a, 4 * s, 0, 0, D, ajj, aii);
  grid_accum_triple(grid_a, 2 * s, 0, 0, aii, D, ajj);
  grid_accum_triple(grid_a, -2 * s, 0, 0, D, aii, ajj);

  // second bracket, over the additional (T2 - 1); the 1/(T2^s - 1) factor is
  // 1/(T2-1) for s=+1 and -T2/(T2-1) for s=-1, so s=-1 contributes an extra
  // monomial -T2 folded into the weights below.
  const long mu_w = 2 * s * (s > 0 ? 1 : -1);  // = 2 for both signs
  const long mu_o2 = s > 0 ? 0 : 1;

  struct Piece {
    long w, o1, o2;
    const DPoly *p1, *p2, *p3;
  };
  std::vector<Piece> pieces;

  // (T1^s - 1) T2^s [ g3jj g1ji - g2jj g1ji + T2^s g1ji g2ji ]
  for (auto [fw, fo1] : {std::pair<long, long>{1, s}, {-1, 0}}) {
    pieces.push_back({fw, fo1, s, &aji, &D, &ajj});
    pieces.push_back({-fw, fo1, s, &aji, &ajj, &D});
    pieces.push_back({fw, fo1, 2 * s, &aji, &aji, &D});
  }

  // (T3^s - 1) g3ji * parenthesis
  const bool tail_inside =
      opt.tail == F1Tail::MinusInside || opt.tail == F1Tail::PlusInside;
  const long tail_sign =
      (opt.tail == F1Tail::MinusInside || opt.tail == F1Tail::MinusOutside) ? -1 : 1;
  std::vector<Piece> paren;
  paren.push_back({1, 0, 0, &D, &D, &aji});
  paren.push_back({-1, 0, s, &aii, &D, &aji});
  paren.push_back({1, 0, 0, &D, &aij, &aji});
  paren.push_back({1, 0, s, &D, &ajj, &aji});
  paren.push_back({-2, 0, 0, &D, &ajj, &aji});
  if (tail_inside) {
    // tail_sign * (T1^s - 1)(T2^s + 1) g1ji inside the parenthesis
    paren.push_back({tail_sign, s, s, &aji, &D, &aji});
    paren.push_back({tail_sign, s, 0, &aji, &D, &aji});
    paren.push_back({-tail_sign, 0, s, &aji, &D, &aji});
    paren.push_back({-tail_sign, 0, 0, &aji, &D, &aji});
  }
  for (auto [fw, fo1, fo2] :
       {std::tuple<long, long, long>{1, s, s}, {-1, 0, 0}}) {
    for (const Piece& p : paren)
      pieces.push_back({fw * p.w, fo1 + p.o1, fo2 + p.o2, p.p1, p.p2, p.p3});
  }
  if (!tail_inside) {
    // tail_sign * (T1^s - 1)(T2^s + 1) g1ji outside, added to the bracket
    for (auto [fw, fo1, fo2] : {std::tuple<long, long, long>{1, s, s},
                                {1, s, 0},
                                {-1, 0, s},
                                {-1, 0, 0}})
      pieces.push_back({tail_sign * fw, fo1, fo2, &aji, &D, &D});
  }

  for (const Piece& p : pieces)
    grid_accum_triple(grid_b, mu_w * p.w, p.o1, p.o2 + mu_o2, *p.p1, *p.p2, *p.p3);
}

void theta_accumulate_pairs(const EngineData& e, const ThetaOptions& opt, Grid2& grid_b) {
  const int n = e.n;
  DPoly g1f, g3f, bracket;
  for (int c0 = 0; c0 < n; ++c0) {
    const int s0 = e.cr[c0].sign;
    const int i0 = e.cr[c0].over_in;
    const int j0 = e.cr[c0].under_in;
    for (int c1 = 0; c1 < n; ++c1) {
      if (opt.pair_sum == PairSum::ExcludeDiagonal && c0 == c1) continue;
      const int s1 = e.cr[c1].sign;
      const int i1 = e.cr[c1].over_in;
      const int j1 = e.cr[c1].under_in;

      const DPoly& g1 = e.a(j1, i0);
      const DPoly& g3 = e.a(j0, i1);
      if (g1.is_zero() || g3.is_zero()) continue;

      // (T1^s0 - 1) * g1, placed on axis 1
      g1f = dp_sub(dp_mul_mono(g1, s0), g1);
      // (T3^s1 - 1) * g3, placed on axis 3
      g3f = dp_sub(dp_mul_mono(g3, s1), g3);
      // T2^s0 g2(i1,i0) + g2(j1,j0) - T2^s0 g2(j1,i0) - g2(i1,j0), axis 2
      bracket = dp_sub(dp_add(dp_mul_mono(e.a(i1, i0), s0), e.a(j1, j0)),
                       dp_add(dp_mul_mono(e.a(j1, i0), s0), e.a(i1, j0)));
      if (bracket.is_zero()) continue;

      // 2 * s1 * mu(s1), with mu folding as in the crossing kernel
      const long w = 2 * s1 * (s1 > 0 ? 1 : -1);
      const long o2 = s1 > 0 ? 0 : 1;
      grid_accum_triple(grid_b, w, 0, o2, g1f, bracket, g3f);
    }
  }
}

ThetaKernelResult theta_kernel(const EngineData& e, const ThetaOptions& opt) {
  const long lo = 2 * e.elo - 4, hi = 2 * e.ehi + 4;
  Grid2 grid_a, grid_b;
  grid_a.init(lo, hi, lo, hi);
  grid_b.init(lo, hi, lo, hi);

  for (int c = 0; c < e.n; ++c) theta_accumulate_crossing(e, opt, c, grid_a, grid_b);
  theta_accumulate_pairs(e, opt, grid_b);

  grid_divide_t2_minus_1(grid_b);

  // result = grid_a + grid_b / (T2 - 1), still over 2 * det1 * det2 * det3
  for (std::size_t t = 0; t < grid_a.c.size(); ++t) grid_a.c[t] += grid_b.c[t];
  return {std::move(grid_a)};
}

}  // namespace

AMatrix build_matrix(const UprightDiagram& d) {
  const int m = d.edge_count();
  AMatrix a;
  a.size = m;
  a.entries.assign(static_cast<std::size_t>(m) * m, Laurent1::zero());
  for (int k = 0; k < m; ++k) a.at(k, k) = Laurent1::constant(1);
  for (const Crossing& c : d.crossings()) {
    const Exp1 s2 = 2 * static_cast<Exp1>(c.sign);
    a.at(c.over_in - 1, c.over_in) -= Laurent1::monomial(s2, rational(1));
    a.at(c.over_in - 1, c.under_in) -=
        Laurent1::constant(1) - Laurent1::monomial(s2, rational(1));
    a.at(c.under_in - 1, c.under_in) -= Laurent1::constant(1);
  }
  return a;
}

GreenData green(const AMatrix& a) {
  const int n = a.size;
  auto elim = ffgj_det_adj<Laurent1, LOps>(a.entries, n);
  GreenData g;
  g.size = n;
  g.det = std::move(elim.det);
  g.adj = std::move(elim.adj);
  if (n <= 32) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Laurent1 s = Laurent1::zero();
        for (int k = 0; k < n; ++k) s += a.at(r, k) * g.adj_at(k, c);
        if (s != (r == c ? g.det : Laurent1::zero()))
          throw InternalError("A * adj != det * I in dense elimination");
      }
  }
  return g;
}

GreenData green(const UprightDiagram& d) {
  EngineData e = build_engine(d);
  GreenData g;
  g.size = e.m;
  g.det = dp_to_laurent(e.det, 0, false);
  g.adj.reserve(e.adj.size());
  for (const DPoly& p : e.adj) g.adj.push_back(dp_to_laurent(p, 0, false));
  return g;
}

Laurent1 alexander(const UprightDiagram& d) {
  // determinant of the core only; no adjugate needed
  const int n = d.crossing_count();
  const int m = d.edge_count();
  std::vector<long> pw(m + 1, 0);
  {
    std::vector<int> over_sign(m + 1, 0);
    for (const Crossing& c : d.crossings()) over_sign[c.over_in] = c.sign;
    for (int k = 1; k < m; ++k) pw[k + 1] = pw[k] + over_sign[k];
  }
  const auto& cr = d.crossings();
  std::vector<DPoly> core(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int ja1 = cr[a].under_in + 1;
    for (int b = 0; b < n; ++b) {
      const int ib = cr[b].over_in;
      const int sb = cr[b].sign;
      DPoly v = dp_const(a == b ? 1 : 0);
      if (ja1 <= ib) {
        const long sh = pw[ib] - pw[ja1];
        DPoly w;
        w.lo = std::min(sh, sh + sb);
        w.c.assign(2, 0);
        w.c.front() = (w.lo == sh) ? 1 : -1;
        w.c.back() = (w.lo == sh) ? -1 : 1;
        v = dp_sub(v, w);
      }
      core[static_cast<std::size_t>(a) * n + b] = std::move(v);
    }
  }
  DPoly det = dp_bareiss_det(std::move(core), n);
  if (dp_eval_one(det) != 1)
    throw InternalError("determinant at T=1 is not 1; elimination is corrupt");
  return assert_integral_exponents(
      dp_to_laurent(det, normalization_doubled_exponent(d), false));
}

namespace {

Laurent1 rho1_from_engine(const UprightDiagram& d, const EngineData& e) {
  DenseAcc acc;
  const long lo = 2 * e.elo - 2, hi = 2 * e.ehi + 2;
  acc.prepare(lo, hi);
  const DPoly det2 = dp_mul(e.det, e.det);
  for (int c = 0; c < e.n; ++c) {
    const int s = e.cr[c].sign;
    const int i = e.cr[c].over_in;
    const int j = e.cr[c].under_in;
    // 2 g(j,i) (g(j+1,j) + g(j,j+1) - g(i,j)) - 2 g(i,i) (g(j,j+1) - det) - det^2
    DPoly inner = dp_sub(dp_add(e.a(j + 1, j), e.a(j, j + 1)), e.a(i, j));
    acc.add_mul(e.a(j, i), inner, 0, 2 * s);
    acc.add_mul(e.a(i, i), dp_sub(e.a(j, j + 1), e.det), 0, -2 * s);
    acc.add(det2, 0, -s);
  }
  for (const auto& [k, phi] : d.rotations()) {
    // -phi * (2 g(k,k) - 1) over the same denominator 2 det^2
    acc.add_mul(e.a(k, k), e.det, 0, -2 * phi);
    acc.add(det2, 0, phi);
  }
  const long shift = 2 * normalization_doubled_exponent(d);
  return assert_integral_exponents(dp_to_laurent(acc.extract(), shift, true));
}

Laurent2 theta_from_engine(const UprightDiagram& d, const EngineData& e,
                           const ThetaOptions& opt) {
  ThetaKernelResult kr = theta_kernel(e, opt);

  // rotation contributions phi_k (g3(k,k) - 1/2): over the common denominator
  // these are phi * (2 g3(k,k) det1 det2 - det1 det2 det3), with no (T2 - 1)
  // factor, so they join the already-divided grid.
  for (const auto& [k, phi] : d.rotations()) {
    grid_accum_triple(kr.grid, 2 * phi, 0, 0, e.det, e.det, e.a(k, k));
    grid_accum_triple(kr.grid, -phi, 0, 0, e.det, e.det, e.det);
  }

  const long shift = 2 * normalization_doubled_exponent(d);
  std::vector<Laurent2::Term> ts;
  for (long r = 0; r < kr.grid.n1; ++r)
    for (long cidx = 0; cidx < kr.grid.n2; ++cidx) {
      const mpz_class& v = kr.grid.c[static_cast<std::size_t>(r) * kr.grid.n2 + cidx];
      if (v == 0) continue;
      Rational q(v);
      q /= 2;
      ts.push_back({Exp2{2 * (kr.grid.lo1 + r) + shift, 2 * (kr.grid.lo2 + cidx) + shift},
                    std::move(q)});
    }
  return assert_integral_exponents(Laurent2::from_terms(std::move(ts)));
}

}  // namespace

Laurent1 rho1(const UprightDiagram& d) {
  EngineData e = build_engine(d);
  return rho1_from_engine(d, e);
}

Laurent2 theta(const UprightDiagram& d, const ThetaOptions& options) {
  EngineData e = build_engine(d);
  return theta_from_engine(d, e, options);
}

Laurent1 specialize_theta(const Laurent2& th) { return collapse_first(th); }

InvariantResult compute_all(const UprightDiagram& d, const ThetaOptions& options) {
  EngineData e = build_engine(d);
  InvariantResult r;
  r.delta = assert_integral_exponents(
      dp_to_laurent(e.det, normalization_doubled_exponent(d), false));
  r.rho1 = rho1_from_engine(d, e);
  r.theta = theta_from_engine(d, e, options);
  r.writhe = d.writhe();
  r.total_rotation = d.total_rotation();
  return r;
}

}  // namespace upknot
