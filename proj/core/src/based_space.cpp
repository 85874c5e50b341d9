#include "manin/based_space.hpp"

#include <set>
#include <stdexcept>

namespace manin {

BasedSpace::BasedSpace(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("BasedSpace: negative dimension");
    labels_.reserve(dim);
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
}

BasedSpace::BasedSpace(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
    if (dim < 0) throw std::invalid_argument("BasedSpace: negative dimension");
    if (static_cast<int>(labels_.size()) != dim)
        throw std::invalid_argument("BasedSpace: label count does not match dimension");
    std::set<std::string> uniq(labels_.begin(), labels_.end());
    if (static_cast<int>(uniq.size()) != dim)
        throw std::invalid_argument("BasedSpace: duplicate basis labels");
}

int BasedSpace::index_of(const std::string& label) const {
    for (int i = 0; i < dim_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

BasedSpace double_space(const BasedSpace& g) {
    std::vector<std::string> labels;
    labels.reserve(2 * g.dim());
    for (int i = 0; i < g.dim(); ++i) labels.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < g.dim(); ++i) labels.push_back("eps" + std::to_string(i + 1));
    return BasedSpace(2 * g.dim(), std::move(labels));
}

}  // namespace manin
