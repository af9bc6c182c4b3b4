#include "polyalg/order.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

int revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  return revlex_range(a, b, lo, hi);
}

}  // namespace

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  return revlex_range(a, b, 0, a.arity());
}

int lex_compare(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

MonomialOrder MonomialOrder::block(std::size_t split) {
  MonomialOrder o(Kind::block);
  o.split_ = split;
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::vector<long>> rows, Kind tie_break) {
  if (tie_break != Kind::grevlex && tie_break != Kind::lex)
    throw PreconditionError("bad-order", "weighted order tie-break must be grevlex or lex");
  MonomialOrder o(Kind::weighted);
  o.rows_ = std::move(rows);
  o.tie_ = tie_break;
  return o;
}

bool MonomialOrder::is_graded() const noexcept {
  switch (kind_) {
    case Kind::grevlex:
      return true;
    case Kind::weighted:
      if (rows_.empty()) return tie_ == Kind::grevlex;
      for (long w : rows_.front())
        if (w != 1) return false;
      return true;
    default:
      return false;
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_compare(a, b);
    case Kind::lex:
      return lex_compare(a, b);
    case Kind::block: {
      int c = grevlex_range(a, b, 0, split_);
      if (c) return c;
      return grevlex_range(a, b, split_, a.arity());
    }
    case Kind::weighted: {
      for (const auto& row : rows_) {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < row.size() && i < a.arity(); ++i) {
          wa += row[i] * long(a[i]);
          wb += row[i] * long(b[i]);
        }
        if (wa != wb) return wa > wb ? 1 : -1;
      }
      return tie_ == Kind::lex ? lex_compare(a, b) : grevlex_compare(a, b);
    }
    case Kind::local_degree:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_range(a, b, 0, a.arity());
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block(" + std::to_string(split_) + ")";
    case Kind::local_degree:
      return "local-degree";
    case Kind::weighted: {
      std::string s = "weighted[";
      for (const auto& row : rows_) {
        s += "(";
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
        s += ")";
      }
      return s + "]" + (tie_ == Kind::lex ? "lex" : "grevlex");
    }
  }
  return "?";
}

}  // namespace locmult
