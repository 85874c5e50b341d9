#pragma once

#include <optional>
#include <vector>

#include "manin/based_space.hpp"
#include "manin/multivector.hpp"
#include "manin/rational.hpp"

namespace manin {

/// Plain element of V (x) V in coordinates: components r^{ij}.
class Tensor2 {
public:
    Tensor2() = default;
    explicit Tensor2(BasedSpace space);

    const BasedSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    const Rat& at(int i, int j) const { return c_[i * dim() + j]; }
    Rat& at(int i, int j) { return c_[i * dim() + j]; }

    Tensor2 symmetric_part() const;
    Tensor2 antisymmetric_part() const;
    bool is_antisymmetric() const;
    bool is_zero() const;

    Tensor2 operator-() const;
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { a += b; return a; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { a -= b; return a; }
    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.space_ == b.space_ && a.c_ == b.c_;
    }

    /// The degree-2 multivector with the same antisymmetric components
    /// (requires antisymmetry; coefficient on i<j is r^{ij}).
    Multivector to_multivector() const;
    static Tensor2 from_multivector(const Multivector& m);

private:
    BasedSpace space_;
    std::vector<Rat> c_;
};

/// Plain element of V (x) V (x) V in coordinates: components T^{ijk}.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(BasedSpace space);

    const BasedSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    const Rat& at(int i, int j, int k) const { return c_[(i * dim() + j) * dim() + k]; }
    Rat& at(int i, int j, int k) { return c_[(i * dim() + j) * dim() + k]; }

    bool is_zero() const;
    bool is_totally_antisymmetric() const;
    /// Projection onto the antisymmetric part: (1/3!) sum of signed
    /// permutations. Fixes already-antisymmetric tensors.
    Tensor3 antisymmetrize() const;

    Tensor3 operator-() const;
    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { a += b; return a; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { a -= b; return a; }
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.space_ == b.space_ && a.c_ == b.c_;
    }

    /// The degree-3 multivector with the same components (requires total
    /// antisymmetry; coefficient on i<j<k is T^{ijk}).
    Multivector to_multivector() const;
    static Tensor3 from_multivector(const Multivector& m);

private:
    BasedSpace space_;
    std::vector<Rat> c_;
};

/// Rank-four Jacobiator sum_cyc f_ij^m f_mk^l, reported per input triple
/// (i,j,k) with a free output index l.
class Jacobiator {
public:
    Jacobiator() = default;
    explicit Jacobiator(BasedSpace space);

    const BasedSpace& space() const { return space_; }
    const Rat& at(int i, int j, int k, int l) const {
        int n = space_.dim();
        return c_[((i * n + j) * n + k) * n + l];
    }
    Rat& at(int i, int j, int k, int l) {
        int n = space_.dim();
        return c_[((i * n + j) * n + k) * n + l];
    }

    bool is_zero() const;
    struct Violation {
        int i, j, k, l;
        Rat value;
    };
    std::optional<Violation> first_violation() const;

private:
    BasedSpace space_;
    std::vector<Rat> c_;
};

/// Structure constants f_ij^k of a bracket on a based space, antisymmetric in
/// the lower pair. Antisymmetry is validated on construction; the Jacobi
/// identity is checked separately by jacobi_defect.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(BasedSpace space);

    static StructureConstants from_entries(
        BasedSpace space, const std::vector<std::tuple<int, int, int, Rat>>& entries);

    const BasedSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    const Rat& f(int i, int j, int k) const { return c_[(i * dim() + j) * dim() + k]; }
    /// Sets f_ij^k = v and f_ji^k = -v.
    void set(int i, int j, int k, const Rat& v);
    /// Writes a single entry without the mirror write; callers ingesting
    /// untrusted data follow up with check_antisymmetry().
    void set_raw(int i, int j, int k, const Rat& v) { c_[(i * dim() + j) * dim() + k] = v; }

    /// Throws std::invalid_argument naming the violating entry if
    /// f_ij^k != -f_ji^k somewhere.
    void check_antisymmetry() const;

    /// Bracket of two coefficient vectors.
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
    /// Bracket of two degree-1 multivectors.
    Multivector bracket(const Multivector& x, const Multivector& y) const;

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.space_ == b.space_ && a.c_ == b.c_;
    }

private:
    BasedSpace space_;
    std::vector<Rat> c_;
};

/// Jacobiator of f; zero iff f satisfies the Jacobi identity.
Jacobiator jacobi_defect(const StructureConstants& f);

/// Cobracket data F: g -> /\^2 g as the component array F_i^{jk},
/// antisymmetric in the upper pair. The same array read as F^{jk}_i gives the
/// bracket structure constants on the dual space.
class Cobracket {
public:
    Cobracket() = default;
    explicit Cobracket(BasedSpace space);

    const BasedSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    const Rat& F(int i, int j, int k) const { return c_[(i * dim() + j) * dim() + k]; }
    /// Sets F_i^{jk} = v and F_i^{kj} = -v.
    void set(int i, int j, int k, const Rat& v);

    bool is_zero() const;

    /// F(e_i) as a degree-2 multivector (coefficient on j<k is F_i^{jk}).
    Multivector of_basis(int i) const;
    /// F(x) for a degree-1 multivector x.
    Multivector of(const Multivector& x) const;

    friend bool operator==(const Cobracket& a, const Cobracket& b) {
        return a.space_ == b.space_ && a.c_ == b.c_;
    }

private:
    BasedSpace space_;
    std::vector<Rat> c_;
};

}  // namespace manin
