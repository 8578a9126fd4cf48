/*
   Copyright 2026 The tensorcat Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file fincat.hpp
 * @brief Skeletal homogeneous multi-fusion categories.
 *
 * Objects are multiplicity vectors over the simple labels; a morphism X -> Y
 * is one matrix per label of shape Y[a] x X[a].
 *
 * Tensor basis. The copies of label c inside X (x) Y are enumerated by tuples
 * (a, i, b, j, mu) in lexicographic order, where i < X[a], j < Y[b] and
 * mu < N_{ab}^c. Every structure constant stored in a file refers to this
 * enumeration.
 *
 * F-symbols. F(a,b,c,d) has rows (e, mu, nu) with mu < N_{ab}^e, nu < N_{ec}^d
 * and columns (f, rho, sigma) with rho < N_{bc}^f, sigma < N_{af}^d, both in
 * lexicographic order. The associator (X(x)Y)(x)Z -> X(x)(Y(x)Z) sends the
 * basis vector of row r to sum_s F(r, s) times the basis vector of column s.
 * Blocks that are not listed are the identity; blocks with a unit factor must
 * be the identity, which makes both unitors identities.
 */

#ifndef TENSORCAT_FINCAT_HPP
#define TENSORCAT_FINCAT_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorcat/exactfield.hpp"

namespace tensorcat {

struct Obj {
    std::vector<int> mult;  ///< one entry per label

    int operator[](std::size_t a) const { return mult[a]; }
    int total() const;
    bool is_zero() const;
    friend bool operator==(const Obj&, const Obj&) = default;
};

struct CategoryPres {
    explicit CategoryPres(Field f) : field(std::move(f)) {}

    std::string name;
    Field field;
    std::vector<std::string> labels;
    std::vector<std::size_t> units;   ///< unit components, sorted
    std::vector<std::size_t> dual_r;  ///< a -> a^R
    std::vector<int> fusion;          ///< N_{ab}^c at (a * L + b) * L + c
    std::map<std::array<std::size_t, 4>, Matrix> F;
    std::vector<Vec> cup;  ///< u_a in Hom(1, a^R (x) a)
    std::vector<Vec> cap;  ///< v_a in Hom(a (x) a^R, 1)

    std::size_t rank() const { return labels.size(); }
    int N(std::size_t a, std::size_t b, std::size_t c) const { return fusion[(a * rank() + b) * rank() + c]; }
    std::size_t dual_l(std::size_t a) const;
    bool is_unit(std::size_t a) const;
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t index_checked(const std::string& label) const;

    /// Row and column index tuples of F(a,b,c,d), see the file comment.
    std::vector<std::array<std::size_t, 3>> f_rows(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
    std::vector<std::array<std::size_t, 3>> f_cols(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
    /// The stored block or the identity of the right size.
    Matrix f_matrix(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
};

using Cat = std::shared_ptr<const CategoryPres>;

struct Mor {
    Obj src, dst;
    std::vector<Matrix> blocks;  ///< blocks[a] has shape dst[a] x src[a]

    bool is_zero() const;
    Mor operator*(const Scalar& s) const;
    friend Mor operator+(const Mor& f, const Mor& g);
    friend Mor operator-(const Mor& f, const Mor& g);
    friend bool operator==(const Mor& f, const Mor& g);
};

/// Position of the channel (a, i, b, j, mu) inside (X (x) Y)[c].
class TensorBasis {
   public:
    TensorBasis(const CategoryPres& c, const Obj& x, const Obj& y);
    const Obj& obj() const noexcept { return obj_; }
    std::size_t index(std::size_t c, std::size_t a, std::size_t i, std::size_t b, std::size_t j,
                      std::size_t mu) const;

   private:
    std::size_t L_;
    Obj obj_;
    std::vector<int> ymult_;
    std::vector<std::size_t> base_;    // [a * L + c]
    std::vector<std::size_t> stride_;  // [a * L + c]
    std::vector<std::size_t> pre_;     // [(a * L + b) * L + c]
    std::vector<int> n_;               // copy of the fusion table
};

// ---------------------------------------------------------------------------
// Objects

Obj zero_obj(const CategoryPres& c);
Obj unit_obj(const CategoryPres& c);
Obj simple_obj(const CategoryPres& c, std::size_t a);
Obj dsum(const Obj& x, const Obj& y);
Obj scale(const Obj& x, int n);
Obj tensor_obj(const CategoryPres& c, const Obj& x, const Obj& y);
Obj dual_r(const CategoryPres& c, const Obj& x);
Obj dual_l(const CategoryPres& c, const Obj& x);
int hom_dim(const Obj& x, const Obj& y);
std::string to_string(const CategoryPres& c, const Obj& x);

// ---------------------------------------------------------------------------
// Morphisms

Mor id(const CategoryPres& c, const Obj& x);
Mor zero_mor(const CategoryPres& c, const Obj& x, const Obj& y);
/// f o g; requires g.dst == f.src.
Mor compose(const Mor& f, const Mor& g);
Mor dsum(const CategoryPres& c, const Mor& f, const Mor& g);
Mor tensor_mor(const CategoryPres& c, const Mor& f, const Mor& g);
/// (X (x) Y) (x) Z -> X (x) (Y (x) Z)
Mor associator(const CategoryPres& c, const Obj& x, const Obj& y, const Obj& z);
/// X (x) (Y (x) Z) -> (X (x) Y) (x) Z
Mor associator_inv(const CategoryPres& c, const Obj& x, const Obj& y, const Obj& z);

/// Basis of Hom(X, Y) by matrix units, in label order then row-major.
std::vector<Mor> hom_basis(const CategoryPres& c, const Obj& x, const Obj& y);
Vec flatten(const Mor& f);
Mor unflatten(const CategoryPres& c, const Obj& x, const Obj& y, const Vec& v);

/// Inclusion of X as the first (or second) summand of X + Y, and projections.
Mor inclusion_first(const CategoryPres& c, const Obj& x, const Obj& y);
Mor inclusion_second(const CategoryPres& c, const Obj& x, const Obj& y);
Mor projection_first(const CategoryPres& c, const Obj& x, const Obj& y);
Mor projection_second(const CategoryPres& c, const Obj& x, const Obj& y);

/// Image of an idempotent endomorphism with inclusion and projection.
struct ImageSplit {
    Obj obj;
    Mor inclusion;
    Mor projection;
};
ImageSplit split_idempotent(const CategoryPres& c, const Mor& idem);

// ---------------------------------------------------------------------------
// Duality. Right duals come from the cup/cap data; left duality of a is the
// right duality of a^L rescaled so that the first nonzero coefficient of the
// coevaluation is 1.

Mor coev_r(const CategoryPres& c, const Obj& x);  ///< 1 -> X^R (x) X
Mor ev_r(const CategoryPres& c, const Obj& x);    ///< X (x) X^R -> 1
Mor coev_l(const CategoryPres& c, const Obj& x);  ///< 1 -> X (x) X^L
Mor ev_l(const CategoryPres& c, const Obj& x);    ///< X^L (x) X -> 1

/// h: X (x) Y -> Z  gives  X -> Z (x) Y^L.
Mor mate_right(const CategoryPres& c, const Mor& h, const Obj& x, const Obj& y);
/// k: X -> Z (x) Y^L  gives  X (x) Y -> Z.
Mor unmate_right(const CategoryPres& c, const Mor& k, const Obj& z, const Obj& y);
/// h: X (x) Y -> Z  gives  Y -> X^R (x) Z.
Mor mate_left(const CategoryPres& c, const Mor& h, const Obj& x, const Obj& y);
/// k: Y -> X^R (x) Z  gives  X (x) Y -> Z.
Mor unmate_left(const CategoryPres& c, const Mor& k, const Obj& x, const Obj& z);

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
    bool ok = true;
    std::string failure;  ///< first violated instance, empty when ok
    std::size_t pentagons = 0, snakes = 0;
};

ValidationReport validate_category(const CategoryPres& c);
/// Throws ValidationFailure with the first violated instance.
void require_valid(const CategoryPres& c);

/// Same combinatorial data with every scalar pushed through e.
CategoryPres scalar_extend(const CategoryPres& c, const Embedding& e);
Mor embed_mor(const Mor& f, const Embedding& e);

}  // namespace tensorcat

#endif
