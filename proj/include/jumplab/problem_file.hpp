#ifndef JUMPLAB_PROBLEM_FILE_HPP
#define JUMPLAB_PROBLEM_FILE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jumplab/errors.hpp"
#include "jumplab/jump.hpp"
#include "jumplab/labels.hpp"

namespace jumplab {

/// Malformed or inconsistent problem file. `line` is 1-based, 0 if unknown.
class InputError : public Error {
public:
    InputError(const std::string& message, std::size_t line);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct EdgeEntry {
    std::string id;
    std::string u;
    std::string v;
    std::map<std::string, std::int64_t> label;
};

struct DivisorEntry {
    std::map<std::string, std::int64_t> weights;
    bool allow_nonzero_degree = false;
};

/// In-memory form of a problem file: a labelled graph, named divisors on
/// its vertices and optionally the orders of a test curve.
struct ProblemFile {
    std::vector<std::string> divisor_basis;
    std::vector<std::string> vertices;
    std::vector<EdgeEntry> edges;
    std::map<std::string, DivisorEntry> divisors;
    std::optional<std::map<std::string, std::int64_t>> orders;

    LabelledGraph labelled_graph() const;
    SectionDivisor section_divisor(const std::string& name) const;
    /// Like section_divisor but also admits divisors flagged with nonzero degree.
    CombinatorialDivisor combinatorial_divisor(const std::string& name) const;
    /// Throws InputError when the file has no orders.
    OrderVector order_vector() const;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

inline bool operator==(const EdgeEntry& a, const EdgeEntry& b) {
    return a.id == b.id && a.u == b.u && a.v == b.v && a.label == b.label;
}

inline bool operator==(const DivisorEntry& a, const DivisorEntry& b) {
    return a.weights == b.weights && a.allow_nonzero_degree == b.allow_nonzero_degree;
}

/// Strict parse: unknown fields, dangling names, negative exponents or
/// orders, and nonzero-degree divisors not flagged as such are rejected
/// with the line of the offending element.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Canonical text: two-space indented JSON, keys sorted, trailing newline.
std::string serialize_problem(const ProblemFile& problem);

/// Parses "z1=3,z2=0" against the basis of `problem`.
std::map<std::string, std::int64_t> parse_inline_orders(const ProblemFile& problem, std::string_view text);

} // namespace jumplab

#endif // JUMPLAB_PROBLEM_FILE_HPP
