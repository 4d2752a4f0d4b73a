#include "sdym/form.hpp"

#include <array>
#include <string>

#include "sdym/errors.hpp"

namespace sdym {

namespace {

void require_degree(int degree) {
  if (degree < 0 || degree > kDim) {
    throw DegreeError("form degree must be in 0..4, got " + std::to_string(degree));
  }
}

template <Coefficient C>
void require_same_shape(const DiscreteForm<C>& a, const DiscreteForm<C>& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw DegreeError(std::string(op) + ": degree mismatch " + std::to_string(a.degree()) +
                      " vs " + std::to_string(b.degree()));
  }
  if (a.doubled() != b.doubled()) {
    throw ComplexError(std::string(op) + ": forms live on different complexes");
  }
}

// Slot of each direction set among the subsets of its size.
const std::array<std::size_t, 16>& slot_table() {
  static const auto table = [] {
    std::array<std::size_t, 16> t{};
    for (int p = 0; p <= kDim; ++p) {
      const auto& subs = subsets_of_size(p);
      for (std::size_t n = 0; n < subs.size(); ++n) t[subs[n].bits()] = n;
    }
    return t;
  }();
  return table;
}

}  // namespace

std::optional<Box> intersect(const std::optional<Box>& a, const std::optional<Box>& b) {
  if (!a) return b;
  if (!b) return a;
  return a->intersect(*b);
}

std::optional<Box> shrink_upper(const std::optional<Box>& r, DirSet axes) {
  if (!r) return r;
  return r->shrink_upper(axes);
}

template <Coefficient C>
DiscreteForm<C> DiscreteForm<C>::from_rule(int degree, Rule rule, bool doubled) {
  require_degree(degree);
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->doubled = doubled;
  impl->rule = std::move(rule);
  return DiscreteForm(std::move(impl));
}

template <Coefficient C>
DiscreteForm<C> DiscreteForm<C>::tabulate(int degree, const Box& region, const Rule& generator,
                                          bool doubled) {
  require_degree(degree);
  const auto& subs = subsets_of_size(degree);
  auto table = std::make_shared<std::vector<C>>();
  if (!region.empty()) {
    table->reserve(region.size() * subs.size());
    for (const auto& k : region.points()) {
      for (DirSet d : subs) table->push_back(generator(k, d));
    }
  }
  const std::size_t stride = subs.size();
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->doubled = doubled;
  impl->region = region;
  impl->rule = [table, region, stride](const MultiIndex& k, DirSet d) -> C {
    return (*table)[region.offset(k) * stride + slot_table()[d.bits()]];
  };
  return DiscreteForm(std::move(impl));
}

template <Coefficient C>
DiscreteForm<C> DiscreteForm<C>::zero(int degree, bool doubled) {
  return from_rule(degree, [](const MultiIndex&, DirSet) { return C::zero(); }, doubled);
}

template <Coefficient C>
DiscreteForm<C> DiscreteForm<C>::make(int degree, bool doubled, const std::optional<Box>& region,
                                      Rule rule) {
  if (region) return tabulate(degree, *region, rule, doubled);
  return from_rule(degree, std::move(rule), doubled);
}

template <Coefficient C>
bool DiscreteForm<C>::defined_at(const MultiIndex& k) const {
  return !impl_->region || impl_->region->contains(k);
}

template <Coefficient C>
C DiscreteForm<C>::at(const MultiIndex& k, DirSet dirs) const {
  if (dirs.size() != impl_->degree) {
    throw DegreeError("form of degree " + std::to_string(impl_->degree) +
                      " evaluated on directions '" + dirs.to_string() + "'");
  }
  if (!defined_at(k)) {
    throw WindowError("form evaluated at " + k.to_string() + " outside its region " +
                          impl_->region->to_string(),
                      k);
  }
  return impl_->rule(k, dirs);
}

template <Coefficient C>
DiscreteForm<C> DiscreteForm<C>::materialize(const Box& region) const {
  const Box r = impl_->region ? impl_->region->intersect(region) : region;
  const DiscreteForm self = *this;
  return tabulate(
      degree(), r, [self](const MultiIndex& k, DirSet d) { return self.at(k, d); }, doubled());
}

template <Coefficient C>
DiscreteForm<C> DiscreteForm<C>::toggled() const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->doubled = !impl->doubled;
  return DiscreteForm(std::move(impl));
}

template <Coefficient C>
DiscreteForm<C> operator+(const DiscreteForm<C>& a, const DiscreteForm<C>& b) {
  require_same_shape(a, b, "sum");
  return DiscreteForm<C>::make(a.degree(), a.doubled(), intersect(a.region(), b.region()),
                               [a, b](const MultiIndex& k, DirSet d) { return a.at(k, d) + b.at(k, d); });
}

template <Coefficient C>
DiscreteForm<C> operator-(const DiscreteForm<C>& a, const DiscreteForm<C>& b) {
  require_same_shape(a, b, "difference");
  return DiscreteForm<C>::make(a.degree(), a.doubled(), intersect(a.region(), b.region()),
                               [a, b](const MultiIndex& k, DirSet d) { return a.at(k, d) - b.at(k, d); });
}

template <Coefficient C>
DiscreteForm<C> operator-(const DiscreteForm<C>& a) {
  return DiscreteForm<C>::make(a.degree(), a.doubled(), a.region(),
                               [a](const MultiIndex& k, DirSet d) { return -a.at(k, d); });
}

template <Coefficient C>
DiscreteForm<C> operator*(const C& s, const DiscreteForm<C>& phi) {
  return DiscreteForm<C>::make(phi.degree(), phi.doubled(), phi.region(),
                               [s, phi](const MultiIndex& k, DirSet d) { return s * phi.at(k, d); });
}

template <Coefficient C>
DiscreteForm<C> operator*(const DiscreteForm<C>& phi, const C& s) {
  return DiscreteForm<C>::make(phi.degree(), phi.doubled(), phi.region(),
                               [s, phi](const MultiIndex& k, DirSet d) { return phi.at(k, d) * s; });
}

template <Coefficient C>
DiscreteForm<C> operator*(const Rational& s, const DiscreteForm<C>& phi) {
  return DiscreteForm<C>::make(phi.degree(), phi.doubled(), phi.region(),
                               [s, phi](const MultiIndex& k, DirSet d) { return s * phi.at(k, d); });
}

template <Coefficient C>
C pair(const Chain& c, const DiscreteForm<C>& phi) {
  if (c.doubled() != phi.doubled()) throw ComplexError("pair: chain and form on different complexes");
  if (c.degree() != phi.degree()) throw DegreeError("pair: chain and form degrees differ");
  C sum = C::zero();
  for (const auto& [cell, coeff] : c.terms()) sum = sum + coeff * phi.at(cell.index, cell.dirs);
  return sum;
}

template <Coefficient C>
DiscreteForm<C> coboundary(const DiscreteForm<C>& phi) {
  if (phi.degree() >= kDim) throw DegreeError("coboundary: a 4-form has no coboundary");
  return DiscreteForm<C>::make(
      phi.degree() + 1, phi.doubled(), shrink_upper(phi.region()),
      [phi](const MultiIndex& k, DirSet d) {
        C sum = C::zero();
        for (int axis : d.axes()) {
          const DirSet face = d.without(axis);
          const C delta = phi.at(shift(k, axis), face) - phi.at(k, face);
          sum = d.count_below(axis) % 2 == 0 ? sum + delta : sum - delta;
        }
        return sum;
      });
}

template <Coefficient C>
DiscreteForm<C> cup(const DiscreteForm<C>& phi, const DiscreteForm<C>& psi) {
  const int p = phi.degree();
  const int q = psi.degree();
  if (p + q > kDim) {
    throw DegreeError("cup: degree " + std::to_string(p) + " + " + std::to_string(q) + " exceeds 4");
  }
  if (phi.doubled() != psi.doubled()) throw ComplexError("cup: forms live on different complexes");
  const auto region = intersect(phi.region(), p > 0 ? shrink_upper(psi.region()) : psi.region());
  return DiscreteForm<C>::make(p + q, phi.doubled(), region, [phi, psi, p](const MultiIndex& k, DirSet d) {
    C sum = C::zero();
    for (DirSet left : subsets_of_size(p)) {
      if ((left.bits() & d.bits()) != left.bits()) continue;
      const DirSet right(d.bits() & ~left.bits());
      // x^j cup x^j = x^j, e^j cup x^{tau j} = e^j, x^j cup e^j = e^j: the
      // right factor sits one step up along every axis carrying e on the left.
      const C term = phi.at(k, left) * psi.at(shift_all(k, left.bits()), right);
      sum = shuffle_sign(left, right) > 0 ? sum + term : sum - term;
    }
    return sum;
  });
}

template <Coefficient C>
DiscreteForm<C> star(const DiscreteForm<C>& phi) {
  return DiscreteForm<C>::make(kDim - phi.degree(), !phi.doubled(), phi.region(),
                               [phi](const MultiIndex& k, DirSet d) {
                                 // <s~_k^d, *phi> = <*s~_k^d, phi> = sign(d, d^c) phi(k, d^c)
                                 const C v = phi.at(k, d.complement());
                                 return permutation_sign(d, d.complement()) > 0 ? v : -v;
                               });
}

template <Coefficient C>
DiscreteForm<C> iota(const DiscreteForm<C>& phi) {
  return phi.toggled();
}

QForm inverse(const QForm& f) {
  if (f.degree() != 0) throw DegreeError("inverse: only 0-forms have pointwise inverses");
  return QForm::make(0, f.doubled(), f.region(), [f](const MultiIndex& k, DirSet d) {
    const Quaternion v = f.at(k, d);
    if (v.is_zero()) throw SingularCoefficientError("inverse: zero coefficient at " + k.to_string(), k);
    return sdym::inverse(v);
  });
}

QForm inverse(const QForm& f, const Box& region) {
  if (f.degree() != 0) throw DegreeError("inverse: only 0-forms have pointwise inverses");
  const Box r = f.region() ? f.region()->intersect(region) : region;
  return QForm::tabulate(0, r, [f](const MultiIndex& k, DirSet d) {
    const Quaternion v = f.at(k, d);
    if (v.is_zero()) throw SingularCoefficientError("inverse: zero coefficient at " + k.to_string(), k);
    return sdym::inverse(v);
  }, f.doubled());
}

QForm imaginary_part(const QForm& phi) {
  return QForm::make(phi.degree(), phi.doubled(), phi.region(),
                     [phi](const MultiIndex& k, DirSet d) { return imaginary_part(phi.at(k, d)); });
}

QForm conj(const QForm& phi) {
  return QForm::make(phi.degree(), phi.doubled(), phi.region(),
                     [phi](const MultiIndex& k, DirSet d) { return conj(phi.at(k, d)); });
}

MForm embed(const QForm& phi) {
  return MForm::make(phi.degree(), phi.doubled(), phi.region(),
                     [phi](const MultiIndex& k, DirSet d) { return embed(phi.at(k, d)); });
}

template <Coefficient C>
DiscreteForm<C> unit_form(bool doubled) {
  return constant_form<C>(0, C::one(), doubled);
}

template <Coefficient C>
DiscreteForm<C> constant_form(int degree, const C& value, bool doubled) {
  return DiscreteForm<C>::from_rule(degree, [value](const MultiIndex&, DirSet) { return value; }, doubled);
}

template <Coefficient C>
DiscreteForm<C> basis_form(const Cell& cell, const C& a) {
  return DiscreteForm<C>::from_rule(
      cell.dimension(),
      [cell, a](const MultiIndex& k, DirSet d) {
        return k == cell.index && d == cell.dirs ? a : C::zero();
      },
      cell.doubled);
}

template <Coefficient C>
DiscreteForm<C> basis_sum(DirSet dirs, bool doubled) {
  return DiscreteForm<C>::from_rule(
      dirs.size(), [dirs](const MultiIndex&, DirSet d) { return d == dirs ? C::one() : C::zero(); },
      doubled);
}

QForm unit_frame(bool conjugate) {
  static const std::array<Quaternion, 4> units = {Quaternion::one(), Quaternion::i(),
                                                  Quaternion::j(), Quaternion::k()};
  return QForm::from_rule(1, [conjugate](const MultiIndex&, DirSet d) {
    const Quaternion& u = units[static_cast<std::size_t>(d.axes().front() - 1)];
    return conjugate ? sdym::conj(u) : u;
  });
}

template <Coefficient C>
FormComparison<C> compare(const DiscreteForm<C>& a, const DiscreteForm<C>& b, const Box& region) {
  require_same_shape(a, b, "compare");
  FormComparison<C> out;
  for (const auto& k : region.points()) {
    ++out.points;
    for (DirSet d : subsets_of_size(a.degree())) {
      ++out.components;
      const C diff = a.at(k, d) - b.at(k, d);
      if (diff.is_zero()) continue;
      ++out.mismatches;
      const Rational m = magnitude_sq(diff);
      if (m > out.worst) out.worst = m;
      if (!out.first_mismatch) out.first_mismatch = Cell{k, d, a.doubled()};
    }
  }
  return out;
}

template <Coefficient C>
FormComparison<C> compare_zero(const DiscreteForm<C>& a, const Box& region) {
  return compare(a, DiscreteForm<C>::zero(a.degree(), a.doubled()), region);
}

#define SDYM_INSTANTIATE_FORM(C)                                                               \
  template class DiscreteForm<C>;                                                              \
  template DiscreteForm<C> operator+(const DiscreteForm<C>&, const DiscreteForm<C>&);          \
  template DiscreteForm<C> operator-(const DiscreteForm<C>&, const DiscreteForm<C>&);          \
  template DiscreteForm<C> operator-(const DiscreteForm<C>&);                                  \
  template DiscreteForm<C> operator*(const C&, const DiscreteForm<C>&);                        \
  template DiscreteForm<C> operator*(const DiscreteForm<C>&, const C&);                        \
  template DiscreteForm<C> operator*(const Rational&, const DiscreteForm<C>&);                 \
  template C pair(const Chain&, const DiscreteForm<C>&);                                       \
  template DiscreteForm<C> coboundary(const DiscreteForm<C>&);                                 \
  template DiscreteForm<C> cup(const DiscreteForm<C>&, const DiscreteForm<C>&);                \
  template DiscreteForm<C> star(const DiscreteForm<C>&);                                       \
  template DiscreteForm<C> iota(const DiscreteForm<C>&);                                       \
  template DiscreteForm<C> unit_form(bool);                                                    \
  template DiscreteForm<C> constant_form(int, const C&, bool);                                 \
  template DiscreteForm<C> basis_form(const Cell&, const C&);                                  \
  template DiscreteForm<C> basis_sum(DirSet, bool);                                            \
  template FormComparison<C> compare(const DiscreteForm<C>&, const DiscreteForm<C>&, const Box&); \
  template FormComparison<C> compare_zero(const DiscreteForm<C>&, const Box&);

SDYM_INSTANTIATE_FORM(Quaternion)
SDYM_INSTANTIATE_FORM(Matrix2C)

#undef SDYM_INSTANTIATE_FORM

}  // namespace sdym
