#include "manin/frame_algebra.hpp"

#include <stdexcept>

namespace manin {

namespace {

BasedSpace frame_space(const BasedSpace& base) {
    std::vector<std::string> labels;
    labels.reserve(2 * base.dim());
    for (int i = 0; i < base.dim(); ++i) labels.push_back(base.label(i) + ".l");
    for (int i = 0; i < base.dim(); ++i) labels.push_back(base.label(i) + ".r");
    return BasedSpace(2 * base.dim(), std::move(labels));
}

}  // namespace

FrameAlgebra::FrameAlgebra(LieAlgebraSpec base) : base_(std::move(base)) {
    const int m = base_.dim();
    StructureConstants f(frame_space(base_.space()));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const Rat& c = base_.f.f(i, j, k);
                if (c.is_zero()) continue;
                f.set(i, j, k, c);
                f.set(m + i, m + j, m + k, -c);
            }
    f_ = std::move(f);
}

Multivector FrameAlgebra::left(const Multivector& u) const {
    if (u.space() != base_.space())
        throw std::invalid_argument("FrameAlgebra::left: space mismatch");
    return u.map_generators(space(), [&](int i) { return gen_left(i); });
}

Multivector FrameAlgebra::right(const Multivector& u) const {
    if (u.space() != base_.space())
        throw std::invalid_argument("FrameAlgebra::right: space mismatch");
    return u.map_generators(space(), [&](int i) { return gen_right(i); });
}

Multivector FrameAlgebra::evaluate(const Multivector& field, const RatMat& B) const {
    if (field.space() != space())
        throw std::invalid_argument("FrameAlgebra::evaluate: field not over the frame");
    if (B.rows() != m() || B.cols() != m())
        throw std::invalid_argument("FrameAlgebra::evaluate: B must be m x m");
    return field.map_generators(base_.space(), [&](int i) {
        if (i < m()) return Multivector::basis(base_.space(), i);
        std::vector<Rat> col(m());
        for (int r = 0; r < m(); ++r) col[r] = B.at(r, i - m());
        return Multivector::vector(base_.space(), col);
    });
}

}  // namespace manin
