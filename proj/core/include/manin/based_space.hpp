#pragma once

#include <string>
#include <vector>

namespace manin {

/// A finite-dimensional vector space with a fixed ordered basis. All tensor
/// and multivector indices refer to positions in this basis.
class BasedSpace {
public:
    BasedSpace() = default;
    explicit BasedSpace(int dim);
    BasedSpace(int dim, std::vector<std::string> labels);

    int dim() const { return dim_; }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Index of a basis label, -1 if absent.
    int index_of(const std::string& label) const;

    friend bool operator==(const BasedSpace& a, const BasedSpace& b) {
        return a.dim_ == b.dim_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const BasedSpace& a, const BasedSpace& b) { return !(a == b); }

private:
    int dim_ = 0;
    std::vector<std::string> labels_;
};

/// The 2n-dimensional space g (+) g* with labels e1..en, eps1..epsn, used for
/// doubles in the basis adapted to the subalgebra and a reference complement.
BasedSpace double_space(const BasedSpace& g);

}  // namespace manin
