#ifndef WREATHGEN_FP_HPP
#define WREATHGEN_FP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace wreathgen
{

/// Arithmetic in the prime field F_p; every result is fully reduced.
class PrimeField
{
public:
  using value_type = std::uint64_t;

  explicit PrimeField(value_type p) : _p(p)
  {
    if (!is_prime(p))
      throw precondition_error(std::to_string(p) + " is not prime");
  }

  value_type p() const { return _p; }

  value_type reduce(std::int64_t x) const
  {
    std::int64_t m = x % static_cast<std::int64_t>(_p);
    return static_cast<value_type>(m < 0 ? m + static_cast<std::int64_t>(_p) : m);
  }
  value_type add(value_type a, value_type b) const { return (a + b) % _p; }
  value_type sub(value_type a, value_type b) const { return (a + _p - b) % _p; }
  value_type neg(value_type a) const { return (_p - a) % _p; }
  value_type mul(value_type a, value_type b) const
  {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % _p);
  }
  value_type inv(value_type a) const
  {
    if (a == 0)
      throw precondition_error("zero has no inverse");
    // Fermat: a^(p-2)
    value_type res = 1, base = a, e = _p - 2;
    while (e) {
      if (e & 1u)
        res = mul(res, base);
      base = mul(base, base);
      e >>= 1u;
    }
    return res;
  }

  friend bool operator==(PrimeField const &, PrimeField const &) = default;

private:
  value_type _p;
};

using FpVector = std::vector<std::uint64_t>;

/// Dense row-major matrix over F_p.
class FpMatrix
{
public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : _field(field), _rows(rows), _cols(cols), _data(rows * cols, 0)
  {}

  static FpMatrix identity(PrimeField field, std::size_t n)
  {
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static FpMatrix from_rows(PrimeField field, std::size_t cols,
                            std::vector<FpVector> const &rows)
  {
    FpMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw precondition_error("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j] % field.p();
    }
    return m;
  }

  /// x -> x^g on F_p^n: coordinate i moves to position g(i).
  static FpMatrix permutation_matrix(PrimeField field, Permutation const &g)
  {
    FpMatrix m(field, g.degree(), g.degree());
    for (Point i = 0; i < g.degree(); ++i)
      m(i, g[i]) = 1;
    return m;
  }

  PrimeField const &field() const { return _field; }
  std::size_t rows() const { return _rows; }
  std::size_t cols() const { return _cols; }

  std::uint64_t &operator()(std::size_t i, std::size_t j) { return _data[i * _cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return _data[i * _cols + j]; }

  FpVector row(std::size_t i) const
  {
    return FpVector(_data.begin() + static_cast<long>(i * _cols),
                    _data.begin() + static_cast<long>((i + 1) * _cols));
  }

  std::vector<FpVector> row_list() const
  {
    std::vector<FpVector> res;
    for (std::size_t i = 0; i < _rows; ++i)
      res.push_back(row(i));
    return res;
  }

  FpMatrix operator*(FpMatrix const &rhs) const
  {
    if (_cols != rhs._rows)
      throw precondition_error("matrix dimension mismatch");
    FpMatrix res(_field, _rows, rhs._cols);
    for (std::size_t i = 0; i < _rows; ++i)
      for (std::size_t k = 0; k < _cols; ++k) {
        std::uint64_t a = (*this)(i, k);
        if (a == 0)
          continue;
        for (std::size_t j = 0; j < rhs._cols; ++j)
          res(i, j) = _field.add(res(i, j), _field.mul(a, rhs(k, j)));
      }
    return res;
  }

  FpMatrix operator-(FpMatrix const &rhs) const
  {
    FpMatrix res(*this);
    for (std::size_t i = 0; i < _data.size(); ++i)
      res._data[i] = _field.sub(_data[i], rhs._data[i]);
    return res;
  }

  FpMatrix operator+(FpMatrix const &rhs) const
  {
    FpMatrix res(*this);
    for (std::size_t i = 0; i < _data.size(); ++i)
      res._data[i] = _field.add(_data[i], rhs._data[i]);
    return res;
  }

  friend bool operator==(FpMatrix const &, FpMatrix const &) = default;

private:
  PrimeField _field;
  std::size_t _rows, _cols;
  std::vector<std::uint64_t> _data;
};

/// Row vector times matrix.
inline FpVector times(FpVector const &v, FpMatrix const &m)
{
  auto const &f = m.field();
  FpVector res(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      res[j] = f.add(res[j], f.mul(v[i], m(i, j)));
  }
  return res;
}

/**
 * A subspace of F_p^n kept in reduced row echelon form. Rows are inserted
 * one at a time; pivot columns are kept strictly increasing.
 */
class RowSpace
{
public:
  RowSpace(PrimeField field, std::size_t dim) : _field(field), _dim(dim) {}

  PrimeField const &field() const { return _field; }
  std::size_t ambient_dim() const { return _dim; }
  std::size_t rank() const { return _rows.size(); }
  std::vector<FpVector> const &rows() const { return _rows; }
  std::vector<std::size_t> const &pivots() const { return _pivots; }

  /// v minus its projection onto the span (zero iff v is in the span).
  FpVector reduce(FpVector v) const
  {
    for (std::size_t r = 0; r < _rows.size(); ++r) {
      std::uint64_t c = v[_pivots[r]];
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < _dim; ++j)
        v[j] = _field.sub(v[j], _field.mul(c, _rows[r][j]));
    }
    return v;
  }

  bool contains(FpVector const &v) const
  {
    for (auto x : reduce(v))
      if (x != 0)
        return false;
    return true;
  }

  /// Returns true if the span grew.
  bool insert(FpVector v)
  {
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < _dim && v[pivot] == 0)
      ++pivot;
    if (pivot == _dim)
      return false;
    std::uint64_t inv = _field.inv(v[pivot]);
    for (auto &x : v)
      x = _field.mul(x, inv);
    // clear the new pivot column from existing rows
    for (auto &row : _rows) {
      std::uint64_t c = row[pivot];
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < _dim; ++j)
        row[j] = _field.sub(row[j], _field.mul(c, v[j]));
    }
    auto pos = static_cast<std::size_t>(
      std::lower_bound(_pivots.begin(), _pivots.end(), pivot) - _pivots.begin());
    _rows.insert(_rows.begin() + static_cast<long>(pos), std::move(v));
    _pivots.insert(_pivots.begin() + static_cast<long>(pos), pivot);
    return true;
  }

  /// Coordinates of a member in terms of rows(); reads the pivot entries.
  FpVector coordinates(FpVector const &v) const
  {
    if (!contains(v))
      throw precondition_error("vector is not in the subspace");
    FpVector c(_rows.size());
    for (std::size_t r = 0; r < _rows.size(); ++r)
      c[r] = v[_pivots[r]];
    return c;
  }

private:
  PrimeField _field;
  std::size_t _dim;
  std::vector<FpVector> _rows;
  std::vector<std::size_t> _pivots;
};

inline std::size_t rank(FpMatrix const &m)
{
  RowSpace rs(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    rs.insert(m.row(i));
  return rs.rank();
}

/// Dimension of {x : x m = 0}.
inline std::size_t left_nullity(FpMatrix const &m) { return m.rows() - rank(m); }

} // namespace wreathgen

#endif // WREATHGEN_FP_HPP
