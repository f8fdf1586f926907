#include "acat/matrix.hpp"

namespace acat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product shape mismatch");
  IntMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += v * other.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix apply shape mismatch");
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

IntVec IntMatrix::column(int c) const {
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, c);
  return r;
}

IntMatrix IntMatrix::columns(int from, int to) const {
  IntMatrix r(rows_, to - from);
  for (int i = 0; i < rows_; ++i)
    for (int j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
  return r;
}

void IntMatrix::swap_rows(int a, int b) {
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}
void IntMatrix::swap_cols(int a, int b) {
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}
void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}
void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}
void IntMatrix::add_row(int dst, int src, const Int& k) {
  for (int j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}
void IntMatrix::add_col(int dst, int src, const Int& k) {
  for (int i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

namespace {

// Transform-tracking wrappers: S = P M Q stays invariant under every op.
struct SnfState {
  IntMatrix S, P, Pinv, Q, Qinv;

  void row_swap(int a, int b) {
    S.swap_rows(a, b);
    P.swap_rows(a, b);
    Pinv.swap_cols(a, b);
  }
  void col_swap(int a, int b) {
    S.swap_cols(a, b);
    Q.swap_cols(a, b);
    Qinv.swap_rows(a, b);
  }
  void row_negate(int r) {
    S.negate_row(r);
    P.negate_row(r);
    Pinv.negate_col(r);
  }
  void row_add(int dst, int src, const Int& k) {  // row dst += k * row src
    S.add_row(dst, src, k);
    P.add_row(dst, src, k);
    Pinv.add_col(src, dst, -k);
  }
  void col_add(int dst, int src, const Int& k) {  // col dst += k * col src
    S.add_col(dst, src, k);
    Q.add_col(dst, src, k);
    Qinv.add_row(src, dst, -k);
  }
};

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SnfState st;
  st.S = m;
  st.P = IntMatrix::identity(m.rows());
  st.Pinv = IntMatrix::identity(m.rows());
  st.Q = IntMatrix::identity(m.cols());
  st.Qinv = IntMatrix::identity(m.cols());

  const int rows = m.rows(), cols = m.cols();
  int t = 0;
  while (t < rows && t < cols) {
    // pick the nonzero entry of least magnitude in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Int& v = st.S.at(i, j);
        if (v == 0) continue;
        if (pi < 0 || abs_int(v) < abs_int(st.S.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) st.row_swap(t, pi);
    if (pj != t) st.col_swap(t, pj);

    // clear row t and column t; restart whenever a smaller pivot appears
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        Int v = st.S.at(i, t);
        if (v == 0) continue;
        Int q = v / st.S.at(t, t);
        st.row_add(i, t, -q);
        if (st.S.at(i, t) != 0) {
          st.row_swap(t, i);  // remainder is strictly smaller
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        Int v = st.S.at(t, j);
        if (v == 0) continue;
        Int q = v / st.S.at(t, t);
        st.col_add(j, t, -q);
        if (st.S.at(t, j) != 0) {
          st.col_swap(t, j);
          clean = false;
        }
      }
    }

    // divisibility: fold in any entry the pivot does not divide
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (st.S.at(i, j) % st.S.at(t, t) != 0) {
          st.row_add(t, i, 1);
          redo = true;
        }
    if (redo) continue;  // re-run the clearing loop with the same t

    if (st.S.at(t, t) < 0) st.row_negate(t);
    ++t;
  }

  SmithNormalForm out;
  out.S = st.S;
  out.P = st.P;
  out.Pinv = st.Pinv;
  out.Q = st.Q;
  out.Qinv = st.Qinv;
  out.rank = t;
  for (int i = 0; i < t; ++i) out.factors.push_back(st.S.at(i, i));
  return out;
}

std::optional<IntVec> solve_linear(const IntMatrix& m, const IntVec& v) {
  SmithNormalForm snf = smith_normal_form(m);
  IntVec pv = snf.P.apply(v);
  IntVec y(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (i < snf.rank) {
      if (pv[i] % snf.S.at(i, i) != 0) return std::nullopt;
      y[i] = pv[i] / snf.S.at(i, i);
    } else if (pv[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.Q.apply(y);
}

}  // namespace acat
