#include "supercontact/spo.hpp"

#include <stdexcept>

namespace supercontact {

OmegaStructure make_omega(const Dims& dims) {
  const int h = dims.l + 1;
  RatMatrix j(2 * h, 2 * h);
  for (int k = 0; k < h; ++k) {
    j(k, h + k) = -1;
    j(h + k, k) = 1;
  }
  GradedMatrix g(dims);
  for (int a = 0; a < 2 * h; ++a)
    for (int b = 0; b < 2 * h; ++b)
      if (j(a, b) != 0) g.set(a + 1, b + 1, j(a, b));
  for (int k = 2 * h + 1; k <= g.size(); ++k) g.set(k, k, Rat(1));
  return {dims, std::move(g), std::move(j)};
}

Rat omega_form(const OmegaStructure& s, std::span<const Rat> u, std::span<const Rat> v) {
  const auto d = static_cast<std::size_t>(s.g.size());
  if (u.size() != d || v.size() != d)
    throw std::invalid_argument("omega_form: vectors must have length " + std::to_string(d));
  Rat out = 0;
  for (std::size_t a = 0; a < d; ++a) {
    if (v[a] == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      const Rat& gab = s.g.entry(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
      if (gab != 0 && u[b] != 0) out += v[a] * gab * u[b];
    }
  }
  return out;
}

namespace {

std::vector<Rat> column(const GradedMatrix& a, int k) {
  std::vector<Rat> c(a.size());
  for (int i = 1; i <= a.size(); ++i) c[i - 1] = a.entry(i, k);
  return c;
}

std::vector<Rat> basis_vector(int size, int k) {
  std::vector<Rat> e(size);
  e[k - 1] = 1;
  return e;
}

bool preserves_homogeneous(const OmegaStructure& s, const GradedMatrix& a, int parity) {
  const int d = a.size();
  std::vector<std::vector<Rat>> cols;
  std::vector<std::vector<Rat>> units;
  for (int k = 1; k <= d; ++k) {
    cols.push_back(column(a, k));
    units.push_back(basis_vector(d, k));
  }
  for (int ia = 1; ia <= d; ++ia) {
    const int sign = sign_of(parity * a.index_parity(ia));
    for (int ib = 1; ib <= d; ++ib) {
      const Rat lhs = omega_form(s, cols[ia - 1], units[ib - 1]);
      const Rat rhs = omega_form(s, units[ia - 1], cols[ib - 1]);
      if (lhs + sign * rhs != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool preserves_omega(const OmegaStructure& s, const GradedMatrix& a) {
  require_same_dims(s.dims, a.dims());
  const auto [even, odd] = a.parity_parts();
  return preserves_homogeneous(s, even, 0) && preserves_homogeneous(s, odd, 1);
}

bool is_spo_blocks(const GradedMatrix& a) {
  const RatMatrix j = make_omega(a.dims()).j;
  const RatMatrix a1 = a.block_a1();
  const RatMatrix a2 = a.block_a2();
  const RatMatrix a3 = a.block_a3();
  const RatMatrix a4 = a.block_a4();
  if (!(a1.transpose() * j + j * a1).is_zero()) return false;
  if (!(a4.transpose() + a4).is_zero()) return false;
  return (a3 + a2.transpose() * j).is_zero();
}

std::string family_name(SpoFamily f) {
  switch (f) {
    case SpoFamily::Sp1: return "Sp1";
    case SpoFamily::Sp2: return "Sp2";
    case SpoFamily::Sp3: return "Sp3";
    case SpoFamily::OddA: return "OddA";
    case SpoFamily::OddB: return "OddB";
    case SpoFamily::O: return "O";
  }
  return "?";
}

SpoFamily parse_family(const std::string& name) {
  for (SpoFamily f : {SpoFamily::Sp1, SpoFamily::Sp2, SpoFamily::Sp3, SpoFamily::OddA, SpoFamily::OddB, SpoFamily::O})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown basis family '" + name + "' (expected Sp1, Sp2, Sp3, OddA, OddB or O)");
}

std::string to_string(const SpoBasisLabel& label) {
  return family_name(label.family) + "(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
}

bool label_in_range(const Dims& dims, const SpoBasisLabel& lab) {
  const int h = dims.l + 1;
  const int n = dims.n;
  const auto in = [](int v, int lo, int hi) { return v >= lo && v <= hi; };
  switch (lab.family) {
    case SpoFamily::Sp1: return in(lab.i, 1, h) && in(lab.j, 1, h);
    case SpoFamily::Sp2:
    case SpoFamily::Sp3: return in(lab.i, 1, h) && in(lab.j, lab.i, h);
    case SpoFamily::OddA: return in(lab.i, h + 1, 2 * h) && in(lab.j, 1, n);
    case SpoFamily::OddB: return in(lab.i, 1, h) && in(lab.j, 1, n);
    case SpoFamily::O: return in(lab.i, 1, n) && in(lab.j, lab.i + 1, n);
  }
  return false;
}

GradedMatrix spo_basis_matrix(const Dims& dims, const SpoBasisLabel& lab) {
  if (!label_in_range(dims, lab)) throw std::out_of_range("basis label " + to_string(lab) + " out of range for " + to_string(dims));
  const int h = dims.l + 1;  // l+1
  const int o = 2 * h;       // 2l+2, offset of the odd block
  const int i = lab.i;
  const int j = lab.j;
  GradedMatrix m(dims);
  switch (lab.family) {
    case SpoFamily::Sp1:
      m.add(i, j, 1);
      m.add(h + j, h + i, -1);
      break;
    case SpoFamily::Sp2:
      m.add(i, h + j, 1);
      if (i != j) m.add(j, h + i, 1);
      break;
    case SpoFamily::Sp3:
      m.add(h + i, j, 1);
      if (i != j) m.add(h + j, i, 1);
      break;
    case SpoFamily::OddA:
      m.add(i, o + j, 1);
      m.add(o + j, i - h, -1);
      break;
    case SpoFamily::OddB:
      m.add(i, o + j, 1);
      m.add(o + j, h + i, 1);
      break;
    case SpoFamily::O:
      m.add(o + i, o + j, 1);
      m.add(o + j, o + i, -1);
      break;
  }
  return m;
}

std::vector<SpoBasisElement> spo_basis(const Dims& dims) {
  const int h = dims.l + 1;
  const int n = dims.n;
  std::vector<SpoBasisElement> out;
  out.reserve(static_cast<std::size_t>(spo_dim(dims)));
  const auto emit = [&](SpoFamily f, int i, int j) {
    const SpoBasisLabel lab{f, i, j};
    out.push_back({lab, spo_basis_matrix(dims, lab)});
  };
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j) emit(SpoFamily::Sp1, i, j);
  for (int i = 1; i <= h; ++i)
    for (int j = i; j <= h; ++j) emit(SpoFamily::Sp2, i, j);
  for (int i = 1; i <= h; ++i)
    for (int j = i; j <= h; ++j) emit(SpoFamily::Sp3, i, j);
  for (int i = h + 1; i <= 2 * h; ++i)
    for (int j = 1; j <= n; ++j) emit(SpoFamily::OddA, i, j);
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= n; ++j) emit(SpoFamily::OddB, i, j);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) emit(SpoFamily::O, i, j);
  return out;
}

long long spo_dim(const Dims& dims) {
  const long long h = dims.l + 1;
  const long long n = dims.n;
  return h * (2 * h + 1) + n * (n - 1) / 2 + 2 * h * n;
}

nlohmann::json basis_to_json(const std::vector<SpoBasisElement>& basis) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [label, matrix] : basis)
    arr.push_back({{"family", family_name(label.family)}, {"i", label.i}, {"j", label.j}, {"matrix", to_json(matrix)}});
  return arr;
}

}  // namespace supercontact
