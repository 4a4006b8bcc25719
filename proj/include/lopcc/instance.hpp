#ifndef LOPCC_INSTANCE_HPP
#define LOPCC_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lopcc/rng.hpp"

namespace lopcc {

/// An ordering of the n vertices: entry at rank i is the vertex placed at
/// position i. Vertices are 0-based internally; all file formats and printed
/// output use 1-based vertex ids.
class Permutation {
public:
    /// Validates that `order` is a bijection onto {0..n-1}.
    explicit Permutation(std::vector<int> order);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    int operator[](int pos) const { return order_[pos]; }
    const std::vector<int>& order() const { return order_; }

    /// Exchanges the vertices at two positions (bijection is preserved).
    void swap_positions(int i, int j) { std::swap(order_[i], order_[j]); }

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> order_;
};

/// A weighted complete digraph: vertex weights d and arc costs C. Immutable
/// after construction; diagonal entries are forced to zero.
class Instance {
public:
    /// `costs` is row-major n*n, n = weights.size(). Throws
    /// std::invalid_argument on negative entries or a size mismatch.
    Instance(std::string name, std::vector<double> weights,
             std::vector<double> costs);

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    double weight(int v) const { return d_[v]; }
    double cost(int from, int to) const { return c_[from * n_ + to]; }
    const double* cost_row(int from) const { return &c_[from * n_]; }
    const std::vector<double>& weights() const { return d_; }

    bool same_data(const Instance& other) const {
        return n_ == other.n_ && name_ == other.name_ && d_ == other.d_ &&
               c_ == other.c_;
    }

private:
    std::string name_;
    int n_;
    std::vector<double> d_;
    std::vector<double> c_;  // row-major
};

/// Parse failure with 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct ParsedInstance {
    Instance instance;
    std::vector<std::string> warnings;  // e.g. nonzero diagonal entries
};

/// Reads the canonical format: '#' starts a comment running to end of line;
/// an optional leading non-numeric line names the instance; then n, the n
/// vertex weights, and the n*n cost matrix in row-major order, whitespace
/// separated with free line wrapping. Nonzero diagonal entries are forced to
/// zero and reported as warnings. Throws ParseError on malformed input.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance parse_instance_file(const std::string& path);

/// Canonical text form. Values are rendered with the shortest decimal that
/// round-trips, so parse(write(x)) reproduces x bit-exactly.
std::string write_instance(const Instance& inst);

/// d and off-diagonal C entries drawn i.i.d. uniform on [0,1); fully
/// determined by (n, seed).
Instance generate_random_instance(int n, std::uint64_t seed);

/// Unbiased Fisher-Yates shuffle of the identity.
Permutation random_permutation(int n, Rng& rng);

}  // namespace lopcc

#endif
