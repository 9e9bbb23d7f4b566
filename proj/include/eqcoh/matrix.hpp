#pragma once

#include "eqcoh/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eqcoh {

using Vec = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(std::size_t n);
    static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Rat> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] Vec row_vec(std::size_t r) const;
    [[nodiscard]] Vec col_vec(std::size_t c) const;
    [[nodiscard]] const std::vector<Rat>& entries() const { return data_; }

    [[nodiscard]] Mat transpose() const;
    [[nodiscard]] bool is_zero() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& a, const Vec& x);
    friend Mat operator*(const Rat& s, Mat a);
    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// [a; b] (rows of b appended below a). Column counts must agree.
Mat vstack(const Mat& a, const Mat& b);
/// [a | b]. Row counts must agree.
Mat hstack(const Mat& a, const Mat& b);

Mat power(const Mat& m, unsigned exponent);

// Vector helpers.
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Rat& s, Vec v);
bool is_zero(const Vec& v);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

} // namespace eqcoh
