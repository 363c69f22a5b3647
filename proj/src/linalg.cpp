#include "coringlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coringlab {

VectorSpace VectorSpace::make(const std::string& stem, int dim) {
    VectorSpace v;
    v.dim = dim;
    v.labels.reserve(dim);
    for (int i = 0; i < dim; ++i) v.labels.push_back(stem + std::to_string(i));
    return v;
}

VectorSpace VectorSpace::named(std::vector<std::string> labels) {
    VectorSpace v;
    v.dim = static_cast<int>(labels.size());
    v.labels = std::move(labels);
    return v;
}

static std::vector<std::string> uniquify(std::vector<std::string> labels) {
    std::map<std::string, int> seen;
    for (auto& l : labels) {
        auto [it, fresh] = seen.emplace(l, 0);
        if (!fresh) l += "#" + std::to_string(++it->second);
    }
    return labels;
}

VectorSpace tensor_space(const VectorSpace& a, const VectorSpace& b) {
    return tensor_space(std::vector<VectorSpace>{a, b});
}

VectorSpace tensor_space(const std::vector<VectorSpace>& factors) {
    VectorSpace v;
    v.dim = 1;
    bool labelled = true;
    for (const auto& f : factors) {
        v.dim *= f.dim;
        labelled = labelled && static_cast<int>(f.labels.size()) == f.dim;
    }
    // large or unlabelled products fall back to positional labels
    if (!labelled || v.dim > 256) return v;
    std::vector<std::string> cur{""};
    for (const auto& f : factors) {
        std::vector<std::string> next;
        next.reserve(cur.size() * f.labels.size());
        for (const auto& pre : cur)
            for (const auto& l : f.labels) next.push_back(pre.empty() ? l : pre + "*" + l);
        cur = std::move(next);
    }
    v.labels = uniquify(std::move(cur));
    return v;
}

VectorSpace unit_space() { return VectorSpace::named({"1"}); }

int tensor_index(const std::vector<int>& dims, const std::vector<int>& idx) {
    int flat = 0;
    for (size_t i = 0; i < dims.size(); ++i) flat = flat * dims[i] + idx[i];
    return flat;
}

std::vector<int> tensor_unindex(const std::vector<int>& dims, int flat) {
    std::vector<int> idx(dims.size(), 0);
    for (size_t i = dims.size(); i-- > 0;) {
        idx[i] = flat % dims[i];
        flat /= dims[i];
    }
    return idx;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long>>& rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols)
            throw Error("linalg.shape", "ragged row list");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows)
        throw Error("linalg.shape", "cannot multiply " + std::to_string(x.rows) + "x" +
                                        std::to_string(x.cols) + " by " + std::to_string(y.rows) +
                                        "x" + std::to_string(y.cols));
    Mat z(x.rows, y.cols);
    std::vector<SparseVec> yrows(y.rows);
    for (int k = 0; k < y.rows; ++k) yrows[k] = sparse_of_row(y, k);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xv = x.at(i, k);
            if (Field::is_zero(xv)) continue;
            for (const auto& [j, yv] : yrows[k]) F.acc(z.at(i, j), xv, yv);
        }
    return z;
}

Mat mat_add(const Field& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("linalg.shape", "add shape mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.add(x.a[i], y.a[i]);
    return z;
}

Mat mat_sub(const Field& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("linalg.shape", "sub shape mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.sub(x.a[i], y.a[i]);
    return z;
}

Mat mat_neg(const Field& F, const Mat& x) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.neg(x.a[i]);
    return z;
}

Mat mat_scale(const Field& F, const Rat& c, const Mat& x) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.mul(c, x.a[i]);
    return z;
}

Mat mat_transpose(const Mat& x) {
    Mat z(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
    return z;
}

Mat mat_kron(const Field& F, const Mat& x, const Mat& y) {
    Mat z(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            const Rat& xv = x.at(i, j);
            if (Field::is_zero(xv)) continue;
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l) {
                    const Rat& yv = y.at(k, l);
                    if (Field::is_zero(yv)) continue;
                    z.at(i * y.rows + k, j * y.cols + l) = F.mul(xv, yv);
                }
        }
    return z;
}

Mat mat_kron_apply(const Field& F, const Mat& x, const Mat& y, const Mat& z) {
    if (x.cols * y.cols != z.rows) throw Error("linalg.shape", "kron_apply shape mismatch");
    Mat out(x.rows * y.rows, z.cols);
    std::vector<SparseVec> xcols(x.cols), ycols(y.cols);
    for (int j = 0; j < x.cols; ++j) xcols[j] = sparse_of_col(x, j);
    for (int j = 0; j < y.cols; ++j) ycols[j] = sparse_of_col(y, j);
    Mat w(x.rows, y.cols);  // scratch: x . Z_k
    for (int k = 0; k < z.cols; ++k) {
        for (auto& v : w.a) v = 0;
        for (int j1 = 0; j1 < x.cols; ++j1)
            for (int j2 = 0; j2 < y.cols; ++j2) {
                const Rat& zv = z.at(j1 * y.cols + j2, k);
                if (Field::is_zero(zv)) continue;
                for (const auto& [i1, xv] : xcols[j1]) F.acc(w.at(i1, j2), xv, zv);
            }
        for (int i1 = 0; i1 < x.rows; ++i1)
            for (int j2 = 0; j2 < y.cols; ++j2) {
                const Rat& wv = w.at(i1, j2);
                if (Field::is_zero(wv)) continue;
                for (const auto& [i2, yv] : ycols[j2])
                    F.acc(out.at(i1 * y.rows + i2, k), wv, yv);
            }
    }
    return out;
}

Mat mat_apply_middle(const Field& F, int pre_dim, const Mat& op, int post_dim, const Mat& x) {
    if (pre_dim * op.cols * post_dim != x.rows)
        throw Error("linalg.shape", "apply_middle shape mismatch");
    Mat out(pre_dim * op.rows * post_dim, x.cols);
    for (int c = 0; c < x.cols; ++c)
        for (int r = 0; r < x.rows; ++r) {
            const Rat& xv = x.at(r, c);
            if (Field::is_zero(xv)) continue;
            int post = r % post_dim;
            int mid = (r / post_dim) % op.cols;
            int pre = r / (post_dim * op.cols);
            for (int i = 0; i < op.rows; ++i) {
                const Rat& ov = op.at(i, mid);
                if (Field::is_zero(ov)) continue;
                int orow = (pre * op.rows + i) * post_dim + post;
                F.acc(out.at(orow, c), ov, xv);
            }
        }
    return out;
}

bool mat_equal(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

bool mat_is_zero(const Mat& x) {
    for (const auto& v : x.a)
        if (!Field::is_zero(v)) return false;
    return true;
}

SparseVec sparse_of_row(const Mat& m, int row) {
    SparseVec v;
    for (int c = 0; c < m.cols; ++c)
        if (!Field::is_zero(m.at(row, c))) v.emplace_back(c, m.at(row, c));
    return v;
}

SparseVec sparse_of_col(const Mat& m, int col) {
    SparseVec v;
    for (int r = 0; r < m.rows; ++r)
        if (!Field::is_zero(m.at(r, col))) v.emplace_back(r, m.at(r, col));
    return v;
}

void RowSpace::load_dense(const SparseVec& v) const {
    ++epoch_;
    for (const auto& [i, x] : v) {
        dense_[i] = x;
        stamp_[i] = epoch_;
    }
}

// eliminate the dense scratch row against stored pivots, left to right
void RowSpace::eliminate_forward(int from_col, bool stop_at_free) const {
    static thread_local Rat coef, scratch;
    for (int c = from_col; c < ncols_; ++c) {
        if (stamp_[c] != epoch_ || Field::is_zero(dense_[c])) continue;
        int r = pivot_row_[c];
        if (r < 0) {
            if (stop_at_free) return;  // leftmost unpivoted nonzero reached
            continue;                  // full reduction keeps sweeping
        }
        coef = dense_[c];
        for (const auto& [j, w] : rows_[r]) {
            if (stamp_[j] != epoch_) {
                dense_[j] = 0;
                stamp_[j] = epoch_;
            }
            if (F_.kind() == FieldKind::rational) {
                mpq_mul(scratch.get_mpq_t(), coef.get_mpq_t(), w.get_mpq_t());
                mpq_sub(dense_[j].get_mpq_t(), dense_[j].get_mpq_t(), scratch.get_mpq_t());
            } else {
                dense_[j] = F_.sub(dense_[j], F_.mul(coef, w));
            }
        }
    }
}

SparseVec RowSpace::compress(int from_col) const {
    SparseVec out;
    for (int c = from_col; c < ncols_; ++c)
        if (stamp_[c] == epoch_ && !Field::is_zero(dense_[c])) out.emplace_back(c, dense_[c]);
    return out;
}

void RowSpace::insert(SparseVec v) {
    if (v.empty()) return;
    load_dense(v);
    eliminate_forward(v[0].first, true);
    SparseVec rest = compress(v[0].first);
    if (rest.empty()) return;
    int pivot = rest[0].first;
    if (rest[0].second != 1) {
        Rat inv = F_.inv(rest[0].second);
        for (auto& e : rest) e.second = F_.mul(e.second, inv);
    }
    pivot_row_[pivot] = static_cast<int>(rows_.size());
    pivot_of_row_.push_back(pivot);
    rows_.push_back(std::move(rest));
    reduced_ = false;
}

void RowSpace::finalize() const {
    if (reduced_) return;
    std::vector<int> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rows_[a][0].first > rows_[b][0].first; });
    for (int idx : order) {
        SparseVec& row = rows_[idx];
        if (row.size() <= 1) continue;
        load_dense(row);
        int pivot = row[0].first;
        eliminate_forward(pivot + 1, false);
        row = compress(pivot);
    }
    reduced_ = true;
}

void RowSpace::insert_rows(const Mat& m) {
    for (int r = 0; r < m.rows; ++r) insert(sparse_of_row(m, r));
}

void RowSpace::insert_cols(const Mat& m) {
    for (int c = 0; c < m.cols; ++c) insert(sparse_of_col(m, c));
}

std::vector<SparseVec> RowSpace::reduced_rows() const {
    finalize();
    std::vector<int> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (int i : order) out.push_back(rows_[i]);
    return out;
}

std::vector<int> RowSpace::pivot_cols() const {
    std::vector<int> p = pivot_of_row_;
    std::sort(p.begin(), p.end());
    return p;
}

Mat RowSpace::as_mat() const {
    auto rr = reduced_rows();
    Mat m(static_cast<int>(rr.size()), ncols_);
    for (size_t r = 0; r < rr.size(); ++r)
        for (const auto& [c, val] : rr[r]) m.at(static_cast<int>(r), c) = val;
    return m;
}

SparseVec RowSpace::reduce(SparseVec v) const {
    if (v.empty()) return v;
    finalize();
    load_dense(v);
    eliminate_forward(v[0].first, false);
    return compress(v[0].first);
}

LinearMap identity_map(const Field& F, const VectorSpace& v) {
    return LinearMap(F, v, v, Mat::identity(v.dim));
}

LinearMap zero_map(const Field& F, const VectorSpace& src, const VectorSpace& dst) {
    return LinearMap(F, src, dst);
}

LinearMap vec_as_map(const Field& F, const VectorSpace& dst, const std::vector<Rat>& coords) {
    if (static_cast<int>(coords.size()) != dst.dim)
        throw Error("linalg.shape", "vector length does not match space dimension");
    Mat m(dst.dim, 1);
    for (int i = 0; i < dst.dim; ++i) m.at(i, 0) = F.normalize(coords[i]);
    return LinearMap(F, unit_space(), dst, std::move(m));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.F != g.F) throw Error("linalg.field", "field mismatch in compose");
    if (g.dst.dim != f.src.dim)
        throw Error("linalg.shape", "compose: inner spaces have dims " +
                                        std::to_string(g.dst.dim) + " and " +
                                        std::to_string(f.src.dim));
    return LinearMap(f.F, g.src, f.dst, mat_mul(f.F, f.m, g.m));
}

LinearMap compose(const LinearMap& f, const LinearMap& g, const LinearMap& h) {
    return compose(compose(f, g), h);
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.F, f.src, f.dst, mat_add(f.F, f.m, g.m));
}

LinearMap sub(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.F, f.src, f.dst, mat_sub(f.F, f.m, g.m));
}

LinearMap neg(const LinearMap& f) { return LinearMap(f.F, f.src, f.dst, mat_neg(f.F, f.m)); }

LinearMap scale(const Rat& c, const LinearMap& f) {
    return LinearMap(f.F, f.src, f.dst, mat_scale(f.F, f.F.normalize(c), f.m));
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.F, tensor_space(f.src, g.src), tensor_space(f.dst, g.dst),
                     mat_kron(f.F, f.m, g.m));
}

LinearMap kron(const std::vector<LinearMap>& fs) {
    if (fs.empty()) throw Error("linalg.shape", "empty kron");
    LinearMap acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = kron(acc, fs[i]);
    return acc;
}

bool equal(const LinearMap& f, const LinearMap& g) {
    return f.src.dim == g.src.dim && f.dst.dim == g.dst.dim && mat_equal(f.m, g.m);
}

bool is_zero(const LinearMap& f) { return mat_is_zero(f.m); }

LinearMap permute_factors(const Field& F, const std::vector<VectorSpace>& factors,
                          const std::vector<int>& perm) {
    if (perm.size() != factors.size()) throw Error("linalg.shape", "permutation length mismatch");
    std::vector<int> in_dims;
    for (const auto& v : factors) in_dims.push_back(v.dim);
    std::vector<VectorSpace> out_factors;
    std::vector<int> out_dims;
    for (int p : perm) {
        out_factors.push_back(factors[p]);
        out_dims.push_back(factors[p].dim);
    }
    VectorSpace src = tensor_space(factors), dst = tensor_space(out_factors);
    Mat m(dst.dim, src.dim);
    for (int flat = 0; flat < src.dim; ++flat) {
        auto idx = tensor_unindex(in_dims, flat);
        std::vector<int> out_idx(perm.size());
        for (size_t j = 0; j < perm.size(); ++j) out_idx[j] = idx[perm[j]];
        m.at(tensor_index(out_dims, out_idx), flat) = 1;
    }
    return LinearMap(F, src, dst, std::move(m));
}

std::vector<Rat> apply_map(const LinearMap& f, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != f.src.dim)
        throw Error("linalg.shape", "apply: vector length mismatch");
    std::vector<Rat> out(f.dst.dim, Rat(0));
    for (int c = 0; c < f.src.dim; ++c) {
        if (Field::is_zero(v[c])) continue;
        for (int r = 0; r < f.dst.dim; ++r) {
            const Rat& fv = f.m.at(r, c);
            if (Field::is_zero(fv)) continue;
            out[r] = f.F.add(out[r], f.F.mul(fv, v[c]));
        }
    }
    return out;
}

int rank(const LinearMap& f) {
    RowSpace rs(f.F, f.src.dim);
    rs.insert_rows(f.m);
    return rs.rank();
}

namespace {

VectorSpace select_labels(const std::string& prefix, const VectorSpace& ambient,
                          const std::vector<int>& cols) {
    if (cols.size() > 256) {
        VectorSpace v;
        v.dim = static_cast<int>(cols.size());
        return v;
    }
    std::vector<std::string> labels;
    labels.reserve(cols.size());
    for (int c : cols) labels.push_back(prefix + "(" + ambient.label(c) + ")");
    return VectorSpace::named(uniquify(std::move(labels)));
}

}  // namespace

SubSpace kernel_from_rowspace(const Field& F, const VectorSpace& src, const RowSpace& rs) {
    auto rows = rs.reduced_rows();
    auto pivots = rs.pivot_cols();
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < src.dim; ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    int k = static_cast<int>(free_cols.size());
    SubSpace s;
    s.ambient = src;
    s.repr = select_labels("ker", src, free_cols);
    Mat incl(src.dim, k), retr(k, src.dim);
    for (int j = 0; j < k; ++j) {
        incl.at(free_cols[j], j) = 1;
        retr.at(j, free_cols[j]) = 1;
        for (size_t r = 0; r < rows.size(); ++r) {
            // row has pivot 1 at pivots[r]; entry at free column j gives the
            // dependent coordinate of the basis vector
            for (const auto& [c, val] : rows[r])
                if (c == free_cols[j]) incl.at(pivots[r], j) = F.neg(val);
        }
    }
    s.incl = LinearMap(F, s.repr, s.ambient, std::move(incl));
    s.retr = LinearMap(F, s.ambient, s.repr, std::move(retr));
    return s;
}

SubSpace kernel(const LinearMap& f) {
    RowSpace rs(f.F, f.src.dim);
    rs.insert_rows(f.m);
    return kernel_from_rowspace(f.F, f.src, rs);
}

SubSpace kernel_of_stack(const Field& F, const VectorSpace& src,
                         const std::vector<const LinearMap*>& conditions) {
    RowSpace rs(F, src.dim);
    for (const auto* c : conditions) {
        if (c->src.dim != src.dim) throw Error("linalg.shape", "kernel_of_stack shape mismatch");
        rs.insert_rows(c->m);
    }
    return kernel_from_rowspace(F, src, rs);
}

QuotientSpace quotient_from_rowspace(const Field& F, const VectorSpace& ambient,
                                     const RowSpace& rs) {
    auto rows = rs.reduced_rows();
    auto pivots = rs.pivot_cols();
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < ambient.dim; ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    int k = static_cast<int>(free_cols.size());
    QuotientSpace q;
    q.ambient = ambient;
    q.repr = select_labels("cls", ambient, free_cols);
    // proj(x) = coordinates of x - sum x_{pivot_i} row_i at the free columns
    Mat proj(k, ambient.dim), sect(ambient.dim, k);
    for (int j = 0; j < k; ++j) {
        proj.at(j, free_cols[j]) = 1;
        sect.at(free_cols[j], j) = 1;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [c, val] : rows[r]) {
            // subtracting x_{p} * row contributes -row[free_j] at column p
            for (int j = 0; j < k; ++j)
                if (c == free_cols[j]) proj.at(j, pivots[r]) = F.neg(val);
        }
    }
    q.proj = LinearMap(F, ambient, q.repr, std::move(proj));
    q.sect = LinearMap(F, q.repr, ambient, std::move(sect));
    return q;
}

QuotientSpace cokernel(const LinearMap& f) {
    RowSpace rs(f.F, f.dst.dim);
    rs.insert_cols(f.m);
    return quotient_from_rowspace(f.F, f.dst, rs);
}

QuotientSpace cokernel_of_columns(const Field& F, const VectorSpace& ambient,
                                  const std::vector<const LinearMap*>& gens) {
    RowSpace rs(F, ambient.dim);
    for (const auto* g : gens) {
        if (g->dst.dim != ambient.dim)
            throw Error("linalg.shape", "cokernel_of_columns shape mismatch");
        rs.insert_cols(g->m);
    }
    return quotient_from_rowspace(F, ambient, rs);
}

std::optional<std::vector<Rat>> solve(const LinearMap& f, const std::vector<Rat>& y) {
    // eliminate on [f | y]
    RowSpace rs(f.F, f.src.dim + 1);
    for (int r = 0; r < f.dst.dim; ++r) {
        SparseVec v = sparse_of_row(f.m, r);
        if (!Field::is_zero(y[r])) v.emplace_back(f.src.dim, y[r]);
        rs.insert(std::move(v));
    }
    std::vector<Rat> x(f.src.dim, Rat(0));
    for (const auto& row : rs.reduced_rows()) {
        if (row[0].first == f.src.dim) return std::nullopt;  // 0 = nonzero
        // pivot at row[0].first; augmented value if present is the last entry
        Rat rhs(0);
        if (!row.empty() && row.back().first == f.src.dim) rhs = row.back().second;
        // free variables are set to zero, so x[pivot] = rhs
        x[row[0].first] = rhs;
    }
    return x;
}

std::optional<LinearMap> solve_map(const LinearMap& f, const LinearMap& rhs) {
    if (rhs.dst.dim != f.dst.dim) throw Error("linalg.shape", "solve_map: target mismatch");
    Mat x(f.src.dim, rhs.src.dim);
    for (int c = 0; c < rhs.src.dim; ++c) {
        std::vector<Rat> y(rhs.dst.dim);
        for (int r = 0; r < rhs.dst.dim; ++r) y[r] = rhs.m.at(r, c);
        auto sol = solve(f, y);
        if (!sol) return std::nullopt;
        for (int r = 0; r < f.src.dim; ++r) x.at(r, c) = (*sol)[r];
    }
    return LinearMap(f.F, rhs.src, f.src, std::move(x));
}

std::optional<LinearMap> right_inverse(const LinearMap& f) {
    return solve_map(f, identity_map(f.F, f.dst));
}

std::optional<LinearMap> inverse(const LinearMap& f) {
    if (f.src.dim != f.dst.dim) return std::nullopt;
    auto r = right_inverse(f);
    if (!r) return std::nullopt;
    if (!mat_equal(mat_mul(f.F, r->m, f.m), Mat::identity(f.src.dim))) return std::nullopt;
    LinearMap inv = *r;
    inv.src = f.dst;
    inv.dst = f.src;
    return inv;
}

LinearMap nullspace_basis(const LinearMap& f) {
    SubSpace k = kernel(f);
    return k.incl;
}

std::optional<LinearMap> corestrict(const LinearMap& f, const SubSpace& w) {
    if (f.dst.dim != w.ambient.dim) throw Error("linalg.shape", "corestrict: ambient mismatch");
    LinearMap back = compose(w.incl, compose(w.retr, f));
    if (!equal(back, f)) return std::nullopt;
    return compose(w.retr, f);
}

std::optional<LinearMap> descend(const LinearMap& f, const QuotientSpace& q) {
    if (f.src.dim != q.ambient.dim) throw Error("linalg.shape", "descend: ambient mismatch");
    LinearMap cand = compose(f, q.sect);
    if (!equal(compose(cand, q.proj), f)) return std::nullopt;
    return cand;
}

std::optional<Mismatch> first_mismatch(const LinearMap& f, const LinearMap& g) {
    if (f.src.dim != g.src.dim || f.dst.dim != g.dst.dim) {
        Mismatch mm;
        mm.src_label = "(shape " + std::to_string(f.m.rows) + "x" + std::to_string(f.m.cols) +
                       " vs " + std::to_string(g.m.rows) + "x" + std::to_string(g.m.cols) + ")";
        return mm;
    }
    for (int c = 0; c < f.src.dim; ++c)
        for (int r = 0; r < f.dst.dim; ++r)
            if (f.m.at(r, c) != g.m.at(r, c)) {
                Mismatch mm;
                mm.col = c;
                mm.row = r;
                mm.src_label = f.src.label(c);
                mm.dst_label = f.dst.label(r);
                mm.lhs = f.m.at(r, c);
                mm.rhs = g.m.at(r, c);
                return mm;
            }
    return std::nullopt;
}

std::optional<Mismatch> first_nonzero(const LinearMap& f) {
    return first_mismatch(f, zero_map(f.F, f.src, f.dst));
}

Mat operator_matrix(const Field& F, int unknown_rows, int unknown_cols,
                    const std::function<Mat(const Mat&)>& op) {
    Mat unit(unknown_rows, unknown_cols);
    Mat probe = op(unit);
    Mat big(probe.rows * probe.cols, unknown_rows * unknown_cols);
    for (int r = 0; r < unknown_rows; ++r)
        for (int c = 0; c < unknown_cols; ++c) {
            unit.at(r, c) = 1;
            Mat val = op(unit);
            unit.at(r, c) = 0;
            // subtract the constant part so that affine operators are usable
            Mat lin = mat_sub(F, val, probe);
            int col = r * unknown_cols + c;
            for (int i = 0; i < lin.rows; ++i)
                for (int j = 0; j < lin.cols; ++j)
                    big.at(i * lin.cols + j, col) = lin.at(i, j);
        }
    return big;
}

AffineSolutions solve_operator(const Field& F, int unknown_rows, int unknown_cols,
                               const std::function<Mat(const Mat&)>& op, const Mat& rhs) {
    Mat zero_in(unknown_rows, unknown_cols);
    Mat c0 = op(zero_in);  // constant part
    if (c0.rows != rhs.rows || c0.cols != rhs.cols)
        throw Error("linalg.shape", "solve_operator: rhs shape does not match operator output");
    Mat big = operator_matrix(F, unknown_rows, unknown_cols, op);
    VectorSpace vsrc = VectorSpace::make("u", big.cols), vdst = VectorSpace::make("e", big.rows);
    LinearMap bigmap(F, vsrc, vdst, big);
    std::vector<Rat> target(big.rows);
    for (int i = 0; i < rhs.rows; ++i)
        for (int j = 0; j < rhs.cols; ++j) target[i * rhs.cols + j] = F.sub(rhs.at(i, j), c0.at(i, j));
    AffineSolutions out;
    auto part = solve(bigmap, target);
    if (!part) return out;
    out.solvable = true;
    out.particular = Mat(unknown_rows, unknown_cols);
    for (int r = 0; r < unknown_rows; ++r)
        for (int c = 0; c < unknown_cols; ++c) out.particular.at(r, c) = (*part)[r * unknown_cols + c];
    LinearMap null = nullspace_basis(bigmap);
    for (int b = 0; b < null.src.dim; ++b) {
        Mat base(unknown_rows, unknown_cols);
        for (int r = 0; r < unknown_rows; ++r)
            for (int c = 0; c < unknown_cols; ++c) base.at(r, c) = null.m.at(r * unknown_cols + c, b);
        out.basis.push_back(std::move(base));
    }
    return out;
}

}  // namespace coringlab
