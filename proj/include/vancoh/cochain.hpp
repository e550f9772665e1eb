#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vancoh/errors.hpp"
#include "vancoh/matrix.hpp"

namespace vancoh {

// Finite cochain complex of Q-vector spaces.  Component t lives in degree
// min_degree + t; differentials[t] maps component t to component t+1 and
// acts on column vectors, so its shape is dims[t+1] x dims[t].
class CochainComplex {
  public:
    CochainComplex() : min_degree_(0) {}
    CochainComplex(int min_degree, std::vector<long long> dims, std::vector<RatMatrix> diffs)
        : min_degree_(min_degree), dims_(std::move(dims)), diffs_(std::move(diffs)) {
        if (!dims_.empty() && diffs_.size() != dims_.size() - 1)
            throw std::invalid_argument("CochainComplex: need one differential per adjacent pair");
        if (dims_.empty() && !diffs_.empty())
            throw std::invalid_argument("CochainComplex: differentials without components");
        for (size_t t = 0; t + 1 < dims_.size(); ++t) {
            if (diffs_[t].rows() != static_cast<size_t>(dims_[t + 1]) ||
                diffs_[t].cols() != static_cast<size_t>(dims_[t]))
                throw std::invalid_argument("CochainComplex: differential shape mismatch at slot " +
                                            std::to_string(t));
        }
    }

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }
    const std::vector<long long>& component_dims() const { return dims_; }
    const std::vector<RatMatrix>& differentials() const { return diffs_; }

    long long dim_at(int degree) const {
        const int t = degree - min_degree_;
        if (t < 0 || t >= static_cast<int>(dims_.size())) return 0;
        return dims_[static_cast<size_t>(t)];
    }

    // d composed with d must vanish in every slot.
    bool is_complex() const {
        for (size_t t = 0; t + 1 < diffs_.size(); ++t)
            if (!(diffs_[t + 1] * diffs_[t]).is_zero()) return false;
        return true;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (size_t t = 0; t < dims_.size(); ++t) {
            const int deg = min_degree_ + static_cast<int>(t);
            chi += (deg % 2 == 0) ? dims_[t] : -dims_[t];
        }
        return chi;
    }

  private:
    int min_degree_;
    std::vector<long long> dims_;
    std::vector<RatMatrix> diffs_;
};

// dim H^j = dim C^j - rank d^j - rank d^{j-1}, by rank-nullity.
inline std::vector<std::pair<int, long long>> cohomology_dims(const CochainComplex& c) {
    if (!c.is_complex())
        throw InvalidComplexError("cohomology_dims: differentials do not compose to zero");
    std::vector<std::pair<int, long long>> out;
    const auto& dims = c.component_dims();
    const auto& diffs = c.differentials();
    std::vector<long long> ranks(diffs.size());
    for (size_t t = 0; t < diffs.size(); ++t) ranks[t] = static_cast<long long>(rank(diffs[t]));
    for (size_t t = 0; t < dims.size(); ++t) {
        long long h = dims[t];
        if (t < ranks.size()) h -= ranks[t];
        if (t > 0) h -= ranks[t - 1];
        out.emplace_back(c.min_degree() + static_cast<int>(t), h);
    }
    return out;
}

}  // namespace vancoh
