#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

/// Finite-dimensional space with a named basis. Names are bookkeeping only;
/// all computation happens on coordinates.
struct VectorSpace {
    int dim = 0;
    std::vector<std::string> labels;  // empty = positional labels e0, e1, ...

    static VectorSpace make(const std::string& stem, int dim);
    static VectorSpace named(std::vector<std::string> labels);
    std::string label(int i) const {
        return i < static_cast<int>(labels.size()) ? labels[i] : "e" + std::to_string(i);
    }
};

/// Tensor product of spaces; index order is leftmost factor most significant.
VectorSpace tensor_space(const VectorSpace& a, const VectorSpace& b);
VectorSpace tensor_space(const std::vector<VectorSpace>& factors);
VectorSpace unit_space();
int tensor_index(const std::vector<int>& dims, const std::vector<int>& idx);
std::vector<int> tensor_unindex(const std::vector<int>& dims, int flat);

/// Dense row-major matrix of exact scalars.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n);
    static Mat from_rows(const std::vector<std::vector<long>>& rows);
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_add(const Field& F, const Mat& x, const Mat& y);
Mat mat_sub(const Field& F, const Mat& x, const Mat& y);
Mat mat_neg(const Field& F, const Mat& x);
Mat mat_scale(const Field& F, const Rat& c, const Mat& x);
Mat mat_transpose(const Mat& x);
Mat mat_kron(const Field& F, const Mat& x, const Mat& y);
/// compose(kron(x, y), z) without materialising the Kronecker product.
Mat mat_kron_apply(const Field& F, const Mat& x, const Mat& y, const Mat& z);
/// (I_pre (x) op (x) I_post) . x without materialising the slot operator.
Mat mat_apply_middle(const Field& F, int pre_dim, const Mat& op, int post_dim, const Mat& x);
bool mat_equal(const Mat& x, const Mat& y);
bool mat_is_zero(const Mat& x);

using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by index, nonzero entries

SparseVec sparse_of_row(const Mat& m, int row);
SparseVec sparse_of_col(const Mat& m, int col);

/// Accumulates the row space of inserted vectors and maintains its canonical
/// reduced row echelon basis. The result is independent of insertion order,
/// which is what makes every derived basis reproducible.
class RowSpace {
public:
    RowSpace(const Field& F, int ncols)
        : F_(F), ncols_(ncols), pivot_row_(ncols, -1), dense_(ncols), stamp_(ncols, 0) {}

    void insert(SparseVec v);
    void insert_rows(const Mat& m);
    void insert_cols(const Mat& m);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    /// Fully reduced rows sorted by pivot column.
    std::vector<SparseVec> reduced_rows() const;
    std::vector<int> pivot_cols() const;
    Mat as_mat() const;

    /// Reduce an arbitrary vector modulo the current row space.
    SparseVec reduce(SparseVec v) const;

private:
    void load_dense(const SparseVec& v) const;
    void eliminate_forward(int from_col, bool stop_at_free) const;
    SparseVec compress(int from_col) const;
    void finalize() const;  // back-substitution to canonical reduced form

    Field F_;
    int ncols_;
    mutable std::vector<SparseVec> rows_;  // echelon, leading coefficient 1
    std::vector<int> pivot_of_row_;
    std::vector<int> pivot_row_;  // column -> row index or -1
    mutable bool reduced_ = true;
    mutable std::vector<Rat> dense_;  // scratch row
    mutable std::vector<unsigned> stamp_;
    mutable unsigned epoch_ = 0;
};

/// Linear map between named spaces; mat is dst.dim x src.dim.
struct LinearMap {
    VectorSpace src, dst;
    Mat m;
    Field F;

    LinearMap() = default;
    LinearMap(Field f, VectorSpace s, VectorSpace d)
        : src(std::move(s)), dst(std::move(d)), m(dst.dim, src.dim), F(std::move(f)) {}
    LinearMap(Field f, VectorSpace s, VectorSpace d, Mat mm)
        : src(std::move(s)), dst(std::move(d)), m(std::move(mm)), F(std::move(f)) {
        if (m.rows != dst.dim || m.cols != src.dim)
            throw Error("linalg.shape",
                        "matrix is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                            " but map needs " + std::to_string(dst.dim) + "x" +
                            std::to_string(src.dim));
    }
};

LinearMap identity_map(const Field& F, const VectorSpace& v);
LinearMap zero_map(const Field& F, const VectorSpace& src, const VectorSpace& dst);
/// Column vector as a map from the one-dimensional space.
LinearMap vec_as_map(const Field& F, const VectorSpace& dst, const std::vector<Rat>& coords);

LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g
LinearMap compose(const LinearMap& f, const LinearMap& g, const LinearMap& h);
LinearMap add(const LinearMap& f, const LinearMap& g);
LinearMap sub(const LinearMap& f, const LinearMap& g);
LinearMap neg(const LinearMap& f);
LinearMap scale(const Rat& c, const LinearMap& f);
LinearMap kron(const LinearMap& f, const LinearMap& g);
LinearMap kron(const std::vector<LinearMap>& fs);
bool equal(const LinearMap& f, const LinearMap& g);
bool is_zero(const LinearMap& f);

/// Rearranges tensor factors: output factor j is input factor perm[j].
LinearMap permute_factors(const Field& F, const std::vector<VectorSpace>& factors,
                          const std::vector<int>& perm);

std::vector<Rat> apply_map(const LinearMap& f, const std::vector<Rat>& v);

/// A subspace W of an ambient space, with a chosen retraction.
/// retr . incl = id on the representative space.
struct SubSpace {
    VectorSpace ambient, repr;
    LinearMap incl;  // repr -> ambient
    LinearMap retr;  // ambient -> repr
};

/// A quotient of an ambient space, with a chosen section.
/// proj . sect = id on the representative space.
struct QuotientSpace {
    VectorSpace ambient, repr;
    LinearMap proj;  // ambient -> repr
    LinearMap sect;  // repr -> ambient
};

int rank(const LinearMap& f);
SubSpace kernel(const LinearMap& f);
QuotientSpace cokernel(const LinearMap& f);
/// Quotient of the ambient space by an accumulated row space.
QuotientSpace quotient_from_rowspace(const Field& F, const VectorSpace& ambient,
                                     const RowSpace& rs);
/// Common solution space of accumulated condition rows.
SubSpace kernel_from_rowspace(const Field& F, const VectorSpace& src, const RowSpace& rs);
/// Quotient by the span of the columns of several maps into the same space.
QuotientSpace cokernel_of_columns(const Field& F, const VectorSpace& ambient,
                                  const std::vector<const LinearMap*>& gens);
SubSpace kernel_of_stack(const Field& F, const VectorSpace& src,
                         const std::vector<const LinearMap*>& conditions);

std::optional<std::vector<Rat>> solve(const LinearMap& f, const std::vector<Rat>& y);
/// Solves f . x = rhs column-by-column; nullopt if any column is unsolvable.
std::optional<LinearMap> solve_map(const LinearMap& f, const LinearMap& rhs);
std::optional<LinearMap> right_inverse(const LinearMap& f);
std::optional<LinearMap> inverse(const LinearMap& f);
/// Basis of the kernel, columns = basis vectors.
LinearMap nullspace_basis(const LinearMap& f);

/// im(f) <= W? If so return retr . f, otherwise nullopt.
std::optional<LinearMap> corestrict(const LinearMap& f, const SubSpace& w);
/// f constant on fibres of Q? If so return f . sect, otherwise nullopt.
std::optional<LinearMap> descend(const LinearMap& f, const QuotientSpace& q);

struct Mismatch {
    int col = 0, row = 0;
    std::string src_label, dst_label;
    Rat lhs, rhs;
};
std::optional<Mismatch> first_mismatch(const LinearMap& f, const LinearMap& g);
std::optional<Mismatch> first_nonzero(const LinearMap& f);

/// Matrix of a linear operator on Hom(src, dst), evaluated entrywise on
/// matrix units; used to pose "solve for an unknown map" problems.
Mat operator_matrix(const Field& F, int unknown_rows, int unknown_cols,
                    const std::function<Mat(const Mat&)>& op);

/// All solutions X of the affine system op(X) = rhs: a particular solution
/// plus a basis of the homogeneous solution space (each given as a matrix).
struct AffineSolutions {
    bool solvable = false;
    Mat particular;
    std::vector<Mat> basis;
};
AffineSolutions solve_operator(const Field& F, int unknown_rows, int unknown_cols,
                               const std::function<Mat(const Mat&)>& op, const Mat& rhs);

}  // namespace coringlab
