#include "heckelab/tensor.hpp"

namespace heckelab {

std::uint32_t checked_power(int dim, int arity) {
    if (dim < 1 || arity < 0) throw ShapeError("invalid tensor shape");
    std::uint64_t s = 1;
    for (int k = 0; k < arity; ++k) {
        s *= static_cast<std::uint64_t>(dim);
        if (s > (std::uint64_t{1} << 24)) throw ResourceError("tensor space V^" + std::to_string(arity) + " too large");
    }
    return static_cast<std::uint32_t>(s);
}

IndexSpace::IndexSpace(int dim, int arity) : dim_(dim), arity_(arity), size_(checked_power(dim, arity)) {
    pow_.resize(static_cast<std::size_t>(arity) + 1);
    pow_[0] = 1;
    for (int k = 1; k <= arity; ++k) pow_[static_cast<std::size_t>(k)] = pow_[static_cast<std::size_t>(k) - 1] * static_cast<std::uint32_t>(dim);
}

std::uint32_t IndexSpace::flatten(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != arity_) throw ShapeError("multi-index has wrong length");
    std::uint32_t r = 0;
    for (int s = arity_ - 1; s >= 0; --s) {
        const int d = idx[static_cast<std::size_t>(s)];
        if (d < 0 || d >= dim_) throw ShapeError("multi-index entry out of range");
        r = r * static_cast<std::uint32_t>(dim_) + static_cast<std::uint32_t>(d);
    }
    return r;
}

std::vector<int> IndexSpace::unflatten(std::uint32_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(arity_));
    for (int s = 0; s < arity_; ++s) {
        idx[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::uint32_t>(dim_));
        flat /= static_cast<std::uint32_t>(dim_);
    }
    return idx;
}

std::string IndexSpace::label(std::uint32_t flat) const {
    std::string s = "(";
    auto idx = unflatten(flat);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k] + 1);
    }
    return s + ")";
}

}  // namespace heckelab
