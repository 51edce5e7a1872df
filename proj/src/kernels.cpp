#include "curvwb/kernels.hpp"

#include "curvwb/tensor_ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace curvwb {

namespace {

struct EndoRow {
  // nonzero (target index, coefficient) pairs of one endomorphism row
  std::vector<std::pair<int, Rational>> terms;
};

std::vector<EndoRow> sparse_rows(const Tensor& a, int u, int v) {
  const int m = a.dim();
  std::vector<EndoRow> rows(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int o = 0; o < m; ++o) {
      const Rational& c = a(u, v, x, o);
      if (!c.is_zero()) rows[static_cast<std::size_t>(x)].terms.emplace_back(o, c);
    }
  return rows;
}

// Fills the (.., u, v) slice of out for one family member.
void fill_slice(const Tensor& a, const Tensor& t, Tensor& out, int u, int v) {
  const int m = t.dim();
  const int l = t.order();
  const std::vector<EndoRow> rows = sparse_rows(a, u, v);
  bool any = false;
  for (const EndoRow& r : rows) any = any || !r.terms.empty();
  if (!any) return;  // slice stays exactly zero

  const std::size_t mm = static_cast<std::size_t>(m);
  MultiIndex mi(m, l);
  do {
    const std::size_t base = t.flat(mi.idx);
    Rational acc;
    for (int s = 0; s < l; ++s) {
      const int xs = mi.idx[static_cast<std::size_t>(s)];
      const EndoRow& row = rows[static_cast<std::size_t>(xs)];
      if (row.terms.empty()) continue;
      const std::ptrdiff_t stride = static_cast<std::ptrdiff_t>(t.stride(s));
      for (const auto& [aa, coef] : row.terms) {
        const std::size_t f =
            static_cast<std::size_t>(static_cast<std::ptrdiff_t>(base) + (aa - xs) * stride);
        acc.subtract_product(coef, t.flat_at(f));
      }
    }
    if (!acc.is_zero())
      out.flat_at((base * mm + static_cast<std::size_t>(u)) * mm + static_cast<std::size_t>(v)) =
          std::move(acc);
  } while (mi.advance());
}

Tensor make_output(const Tensor& t) {
  std::vector<Slot> val = t.valence();
  val.push_back(Slot::Lower);
  val.push_back(Slot::Lower);
  return Tensor(t.dim(), val);
}

void check_inputs(const Tensor& a, const Tensor& t, const char* what) {
  require_valence(a, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Upper}, what);
  require_dim(a, t.dim(), what);
  if (t.order() < 1) throw input_error(std::string(what) + ": tensor must have at least one slot");
  for (Slot s : t.valence())
    if (s != Slot::Lower) throw input_error(std::string(what) + ": tensor must be fully covariant");
}

}  // namespace

Tensor derivation_full_serial(const Tensor& a, const Tensor& t) {
  check_inputs(a, t, "derivation_full");
  const int m = t.dim();
  Tensor out = make_output(t);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) fill_slice(a, t, out, u, v);
  return out;
}

Tensor derivation_full_parallel(const Tensor& a, const Tensor& t) {
  check_inputs(a, t, "derivation_full");
  const int m = t.dim();
  Tensor out = make_output(t);
  const int blocks = m * m;
  // Distinct (u,v) blocks write disjoint strided slices of out.
#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < blocks; ++b) fill_slice(a, t, out, b / m, b % m);
  return out;
}

Tensor derivation_full(const Tensor& a, const Tensor& t, ExecMode mode) {
  return mode == ExecMode::Parallel ? derivation_full_parallel(a, t)
                                    : derivation_full_serial(a, t);
}

Tensor q_full(const Metric& g, const Tensor& t, ExecMode mode) {
  return derivation_full(wedge_family(g), t, mode);
}

}  // namespace curvwb
