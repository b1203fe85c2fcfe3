#pragma once

#include <cstddef>
#include <vector>

namespace rabi {

// Dense real square matrix, row-major storage.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    double max_abs() const;
    double max_asymmetry() const;  // max_ij |a(i,j) - a(j,i)|
    void symmetrize();             // a <- (a + a^T)/2

private:
    std::size_t dim_ = 0;
    std::vector<double> a_;
};

}  // namespace rabi
