#include "supercontact/golden.hpp"

namespace supercontact {

namespace {

struct Builder {
  Dims d;

  Superfunction one() const { return Superfunction::constant(d, Rat(1)); }
  Superfunction v(CoordId c) const { return Superfunction::variable(d, c); }
  SuperVectorField del(CoordId c) const { return SuperVectorField::partial(d, c); }

  /// sum x_i d/dx_i + sum y_i d/dy_i + sum th_j d/dth_j
  SuperVectorField euler() const {
    SuperVectorField e(d);
    for (CoordId c : all_coords(d))
      if (c.kind != CoordId::Kind::Z) e.add_component(c, v(c));
    return e;
  }
  /// euler() + z d/dz
  SuperVectorField full_euler() const { return euler() + v(CoordId::z()) * del(CoordId::z()); }
};

std::string label_of(const std::string& scale, const std::string& f) { return scale + "X_{" + f + "}"; }

}  // namespace

std::vector<GoldenCase> golden_cases(const Dims& d) {
  const Builder b{d};
  const int h = d.l + 1;
  const CoordId z = CoordId::z();
  const auto X = [](int k) { return CoordId::x(k); };
  const auto Y = [](int k) { return CoordId::y(k); };
  const auto TH = [](int k) { return CoordId::theta(k); };
  const auto xs = [](int k) { return "x" + std::to_string(k); };
  const auto ys = [](int k) { return "y" + std::to_string(k); };
  const auto ths = [](int k) { return "th" + std::to_string(k); };

  std::vector<GoldenCase> out;
  const auto push = [&](SpoFamily f, int i, int j, SuperVectorField field, Superfunction ham, std::string rel) {
    out.push_back({{f, i, j}, std::move(field), std::move(ham), std::move(rel)});
  };

  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j) {
      if (i == 1 && j == 1)
        push(SpoFamily::Sp1, i, j, b.euler() + Rat(2) * (b.v(z) * b.del(z)), Rat(2) * b.v(z), label_of("2", "z"));
      else if (i == 1)
        push(SpoFamily::Sp1, i, j, b.v(X(j - 1)) * b.full_euler() + b.v(z) * b.del(Y(j - 1)),
             Rat(2) * b.v(X(j - 1)) * b.v(z), label_of("2", xs(j - 1) + "z"));
      else if (j == 1)
        push(SpoFamily::Sp1, i, j, -b.del(X(i - 1)) + b.v(Y(i - 1)) * b.del(z), Rat(2) * b.v(Y(i - 1)),
             label_of("2", ys(i - 1)));
      else
        push(SpoFamily::Sp1, i, j, b.v(Y(i - 1)) * b.del(Y(j - 1)) - b.v(X(j - 1)) * b.del(X(i - 1)),
             Rat(2) * b.v(X(j - 1)) * b.v(Y(i - 1)), label_of("2", xs(j - 1) + ys(i - 1)));
    }

  for (int i = 1; i <= h; ++i)
    for (int j = i; j <= h; ++j) {
      if (i == 1 && j == 1)
        push(SpoFamily::Sp2, i, j, b.v(z) * b.full_euler(), b.v(z) * b.v(z), label_of("", "z^2"));
      else if (i == j)
        push(SpoFamily::Sp2, i, j, -(b.v(Y(i - 1)) * b.del(X(i - 1))), b.v(Y(i - 1)) * b.v(Y(i - 1)),
             label_of("", ys(i - 1) + "^2"));
      else if (i == 1)
        push(SpoFamily::Sp2, i, j, b.v(Y(j - 1)) * b.full_euler() - b.v(z) * b.del(X(j - 1)),
             Rat(2) * b.v(Y(j - 1)) * b.v(z), label_of("2", ys(j - 1) + "z"));
      else
        push(SpoFamily::Sp2, i, j, -(b.v(Y(j - 1)) * b.del(X(i - 1)) + b.v(Y(i - 1)) * b.del(X(j - 1))),
             Rat(2) * b.v(Y(i - 1)) * b.v(Y(j - 1)), label_of("2", ys(i - 1) + ys(j - 1)));
    }

  for (int i = 1; i <= h; ++i)
    for (int j = i; j <= h; ++j) {
      if (i == 1 && j == 1)
        push(SpoFamily::Sp3, i, j, -b.del(z), -b.one(), label_of("-", "1"));
      else if (i == j)
        push(SpoFamily::Sp3, i, j, -(b.v(X(i - 1)) * b.del(Y(i - 1))), -(b.v(X(i - 1)) * b.v(X(i - 1))),
             label_of("-", xs(i - 1) + "^2"));
      else if (i == 1)
        push(SpoFamily::Sp3, i, j, -(b.del(Y(j - 1)) + b.v(X(j - 1)) * b.del(z)), Rat(-2) * b.v(X(j - 1)),
             label_of("-2", xs(j - 1)));
      else
        push(SpoFamily::Sp3, i, j, -(b.v(X(j - 1)) * b.del(Y(i - 1)) + b.v(X(i - 1)) * b.del(Y(j - 1))),
             Rat(-2) * b.v(X(j - 1)) * b.v(X(i - 1)), label_of("-2", xs(j - 1) + xs(i - 1)));
    }

  for (int i = h + 1; i <= 2 * h; ++i)
    for (int j = 1; j <= d.n; ++j) {
      if (i == h + 1)
        push(SpoFamily::OddA, i, j, b.v(TH(j)) * b.del(z) + b.del(TH(j)), Rat(2) * b.v(TH(j)), label_of("2", ths(j)));
      else
        push(SpoFamily::OddA, i, j, b.v(TH(j)) * b.del(Y(i - h - 1)) + b.v(X(i - h - 1)) * b.del(TH(j)),
             Rat(2) * b.v(X(i - h - 1)) * b.v(TH(j)), label_of("2", xs(i - h - 1) + ths(j)));
    }

  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= d.n; ++j) {
      if (i == 1)
        push(SpoFamily::OddB, i, j, -(b.v(TH(j)) * b.full_euler()) - b.v(z) * b.del(TH(j)),
             Rat(-2) * b.v(z) * b.v(TH(j)), label_of("-2", "z" + ths(j)));
      else
        push(SpoFamily::OddB, i, j, b.v(TH(j)) * b.del(X(i - 1)) - b.v(Y(i - 1)) * b.del(TH(j)),
             Rat(-2) * b.v(Y(i - 1)) * b.v(TH(j)), label_of("-2", ys(i - 1) + ths(j)));
    }

  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j)
      push(SpoFamily::O, i, j, b.v(TH(i)) * b.del(TH(j)) - b.v(TH(j)) * b.del(TH(i)), Rat(2) * b.v(TH(i)) * b.v(TH(j)),
           label_of("2", ths(i) + ths(j)));

  return out;
}

}  // namespace supercontact
