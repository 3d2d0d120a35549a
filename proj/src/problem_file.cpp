#include "jumplab/problem_file.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

namespace jumplab {

using nlohmann::json;

InputError::InputError(const std::string& message, std::size_t line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

// Input iterator over a character buffer that counts the newlines consumed.
class LineCountingIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    LineCountingIterator() = default;
    LineCountingIterator(const char* p, std::size_t* line) : p_(p), line_(line) {}

    reference operator*() const { return *p_; }
    LineCountingIterator& operator++() {
        if (*p_ == '\n') {
            ++*line_;
        }
        ++p_;
        return *this;
    }
    LineCountingIterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
    }
    friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ == b.p_; }

private:
    const char* p_ = nullptr;
    std::size_t* line_ = nullptr;
};

// Builds the DOM while recording the source line of every value, keyed by
// JSON pointer.
class LineTrackingSax : public nlohmann::json_sax<json> {
public:
    explicit LineTrackingSax(const std::size_t* line) : line_(line) {}

    json root;
    std::map<std::string, std::size_t> lines;
    std::string error;
    std::size_t error_line = 0;

    bool null() override { return put(json(nullptr)); }
    bool boolean(bool v) override { return put(json(v)); }
    bool number_integer(number_integer_t v) override { return put(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return put(json(v)); }
    bool number_float(number_float_t v, const string_t&) override { return put(json(v)); }
    bool string(string_t& v) override { return put(json(v)); }
    bool binary(binary_t& v) override { return put(json(v)); }

    bool start_object(std::size_t) override {
        json* slot = place(json::object());
        stack_.push_back(Frame{slot, pending_pointer_, 0});
        return true;
    }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        json* slot = place(json::array());
        stack_.push_back(Frame{slot, pending_pointer_, 0});
        return true;
    }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        const std::string ptr = stack_.back().pointer + "/" + escape(k);
        lines.emplace(ptr, *line_);
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        error = ex.what();
        if (const auto at = error.find("syntax error"); at != std::string::npos) {
            error = error.substr(at);
        }
        error_line = *line_;
        return false;
    }

private:
    struct Frame {
        json* value;
        std::string pointer;
        std::size_t next_index;
    };

    static std::string escape(const std::string& token) {
        std::string out;
        for (const char c : token) {
            if (c == '~') {
                out += "~0";
            } else if (c == '/') {
                out += "~1";
            } else {
                out += c;
            }
        }
        return out;
    }

    json* place(json value) {
        if (stack_.empty()) {
            root = std::move(value);
            pending_pointer_.clear();
            lines.emplace("", *line_);
            return &root;
        }
        Frame& top = stack_.back();
        if (top.value->is_array()) {
            pending_pointer_ = top.pointer + "/" + std::to_string(top.next_index++);
            lines.emplace(pending_pointer_, *line_);
            top.value->push_back(std::move(value));
            return &top.value->back();
        }
        pending_pointer_ = top.pointer + "/" + escape(key_);
        lines.emplace(pending_pointer_, *line_);
        auto& slot = (*top.value)[key_];
        slot = std::move(value);
        return &slot;
    }

    bool put(json value) {
        place(std::move(value));
        return true;
    }

    const std::size_t* line_;
    std::vector<Frame> stack_;
    std::string key_;
    std::string pending_pointer_;
};

class Validator {
public:
    explicit Validator(const std::map<std::string, std::size_t>& lines) : lines_(lines) {}

    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
        // Fall back to the nearest enclosing element with a known line.
        std::string p = pointer;
        while (true) {
            const auto it = lines_.find(p);
            if (it != lines_.end()) {
                throw InputError(message, it->second);
            }
            if (p.empty()) {
                throw InputError(message, 0);
            }
            p = p.substr(0, p.rfind('/'));
        }
    }

    void only_keys(const json& obj, const std::string& pointer, const std::set<std::string>& allowed) const {
        for (const auto& [k, v] : obj.items()) {
            if (!allowed.contains(k)) {
                fail(pointer + "/" + k, "unknown field '" + k + "'");
            }
        }
    }

    const json& require(const json& obj, const std::string& pointer, const std::string& key) const {
        if (!obj.contains(key)) {
            fail(pointer, "missing required field '" + key + "'");
        }
        return obj.at(key);
    }

    std::string string_at(const json& v, const std::string& pointer, const std::string& what) const {
        if (!v.is_string() || v.get<std::string>().empty()) {
            fail(pointer, what + " must be a nonempty string");
        }
        return v.get<std::string>();
    }

    std::int64_t integer_at(const json& v, const std::string& pointer, const std::string& what) const {
        if (!v.is_number_integer()) {
            fail(pointer, what + " must be an integer");
        }
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
            fail(pointer, what + " is out of range");
        }
        return v.get<std::int64_t>();
    }

    std::map<std::string, std::int64_t> int_map(const json& v, const std::string& pointer, const std::string& what,
                                                const std::set<std::string>& names, const std::string& name_kind,
                                                bool nonnegative) const {
        if (!v.is_object()) {
            fail(pointer, what + " must be an object");
        }
        std::map<std::string, std::int64_t> out;
        for (const auto& [k, x] : v.items()) {
            const std::string ptr = pointer + "/" + k;
            if (!names.contains(k)) {
                fail(ptr, what + " refers to undeclared " + name_kind + " '" + k + "'");
            }
            const std::int64_t n = integer_at(x, ptr, what + " entry '" + k + "'");
            if (nonnegative && n < 0) {
                fail(ptr, what + " entry '" + k + "' must be nonnegative");
            }
            out.emplace(k, n);
        }
        return out;
    }

    std::vector<std::string> name_list(const json& v, const std::string& pointer, const std::string& what) const {
        if (!v.is_array()) {
            fail(pointer, what + " must be an array of names");
        }
        std::vector<std::string> out;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string ptr = pointer + "/" + std::to_string(i);
            std::string name = string_at(v[i], ptr, what + " entry");
            if (!seen.insert(name).second) {
                fail(ptr, "duplicate name '" + name + "' in " + what);
            }
            out.push_back(std::move(name));
        }
        return out;
    }

private:
    const std::map<std::string, std::size_t>& lines_;
};

ProblemFile build(const json& doc, const Validator& check) {
    if (!doc.is_object()) {
        check.fail("", "problem file must be a JSON object");
    }
    check.only_keys(doc, "", {"divisor_basis", "vertices", "edges", "divisors", "orders"});

    ProblemFile p;
    p.divisor_basis = check.name_list(check.require(doc, "", "divisor_basis"), "/divisor_basis", "divisor_basis");
    if (p.divisor_basis.empty()) {
        check.fail("/divisor_basis", "divisor_basis must name at least one divisor");
    }
    p.vertices = check.name_list(check.require(doc, "", "vertices"), "/vertices", "vertices");
    const std::set<std::string> basis_names(p.divisor_basis.begin(), p.divisor_basis.end());
    const std::set<std::string> vertex_names(p.vertices.begin(), p.vertices.end());

    const json& edges = check.require(doc, "", "edges");
    if (!edges.is_array()) {
        check.fail("/edges", "edges must be an array");
    }
    std::set<std::string> edge_ids;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string ptr = "/edges/" + std::to_string(i);
        const json& e = edges[i];
        if (!e.is_object()) {
            check.fail(ptr, "edge must be an object");
        }
        check.only_keys(e, ptr, {"id", "ends", "label"});
        EdgeEntry entry;
        entry.id = check.string_at(check.require(e, ptr, "id"), ptr + "/id", "edge id");
        if (!edge_ids.insert(entry.id).second) {
            check.fail(ptr + "/id", "duplicate edge id '" + entry.id + "'");
        }
        const json& ends = check.require(e, ptr, "ends");
        if (!ends.is_array() || ends.size() != 2) {
            check.fail(ptr + "/ends", "ends must list exactly two vertices");
        }
        entry.u = check.string_at(ends[0], ptr + "/ends/0", "edge end");
        entry.v = check.string_at(ends[1], ptr + "/ends/1", "edge end");
        for (const auto& [end, idx] : {std::pair{entry.u, 0}, std::pair{entry.v, 1}}) {
            if (!vertex_names.contains(end)) {
                check.fail(ptr + "/ends/" + std::to_string(idx), "edge end refers to undeclared vertex '" + end + "'");
            }
        }
        entry.label = check.int_map(check.require(e, ptr, "label"), ptr + "/label", "label", basis_names,
                                    "divisor", true);
        p.edges.push_back(std::move(entry));
    }

    if (doc.contains("divisors")) {
        const json& divisors = doc.at("divisors");
        if (!divisors.is_object()) {
            check.fail("/divisors", "divisors must be an object");
        }
        for (const auto& [name, body] : divisors.items()) {
            const std::string ptr = "/divisors/" + name;
            DivisorEntry entry;
            if (body.is_object() && body.contains("weights") && body.at("weights").is_object()) {
                check.only_keys(body, ptr, {"weights", "allow_nonzero_degree"});
                entry.weights = check.int_map(body.at("weights"), ptr + "/weights", "divisor '" + name + "'",
                                              vertex_names, "vertex", false);
                if (body.contains("allow_nonzero_degree")) {
                    if (!body.at("allow_nonzero_degree").is_boolean()) {
                        check.fail(ptr + "/allow_nonzero_degree", "allow_nonzero_degree must be a boolean");
                    }
                    entry.allow_nonzero_degree = body.at("allow_nonzero_degree").get<bool>();
                }
            } else {
                entry.weights =
                    check.int_map(body, ptr, "divisor '" + name + "'", vertex_names, "vertex", false);
            }
            std::int64_t degree = 0;
            for (const auto& [v, c] : entry.weights) {
                degree += c;
            }
            if (degree != 0 && !entry.allow_nonzero_degree) {
                check.fail(ptr, "divisor '" + name + "' has total degree " + std::to_string(degree) +
                                    "; mark it \"allow_nonzero_degree\": true if intended");
            }
            p.divisors.emplace(name, std::move(entry));
        }
    }

    if (doc.contains("orders")) {
        p.orders = check.int_map(doc.at("orders"), "/orders", "orders", basis_names, "divisor", true);
    }
    return p;
}

json to_json(const ProblemFile& p) {
    json doc;
    doc["divisor_basis"] = p.divisor_basis;
    doc["vertices"] = p.vertices;
    doc["edges"] = json::array();
    for (const EdgeEntry& e : p.edges) {
        doc["edges"].push_back({{"id", e.id}, {"ends", {e.u, e.v}}, {"label", e.label}});
    }
    if (!p.divisors.empty()) {
        json divisors = json::object();
        for (const auto& [name, d] : p.divisors) {
            if (d.allow_nonzero_degree) {
                divisors[name] = {{"weights", d.weights}, {"allow_nonzero_degree", true}};
            } else {
                divisors[name] = d.weights;
            }
        }
        doc["divisors"] = divisors;
    }
    if (p.orders) {
        doc["orders"] = *p.orders;
    }
    return doc;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
    std::size_t line = 1;
    LineTrackingSax sax(&line);
    const LineCountingIterator first(text.data(), &line);
    const LineCountingIterator last(text.data() + text.size(), &line);
    const bool ok = json::sax_parse(first, last, &sax);
    if (!ok) {
        throw InputError(sax.error.empty() ? "malformed JSON" : sax.error, sax.error_line);
    }
    const Validator check(sax.lines);
    return build(sax.root, check);
}

ProblemFile load_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'", 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string serialize_problem(const ProblemFile& problem) {
    return to_json(problem).dump(2) + "\n";
}

LabelledGraph ProblemFile::labelled_graph() const {
    LabelledGraph lg;
    lg.basis = BoundaryBasis(divisor_basis);
    for (const auto& v : vertices) {
        lg.graph.add_vertex(v);
    }
    for (const EdgeEntry& e : edges) {
        lg.graph.add_edge(e.id, e.u, e.v);
        std::vector<std::int64_t> a(divisor_basis.size(), 0);
        for (const auto& [name, exponent] : e.label) {
            a[*lg.basis.index_of(name)] = exponent;
        }
        lg.labels.emplace_back(std::move(a));
    }
    return lg;
}

SectionDivisor ProblemFile::section_divisor(const std::string& name) const {
    const auto it = divisors.find(name);
    if (it == divisors.end()) {
        throw InputError("no divisor named '" + name + "'", 0);
    }
    SectionDivisor d;
    for (const auto& [vertex, coefficient] : it->second.weights) {
        const auto idx = std::find(vertices.begin(), vertices.end(), vertex) - vertices.begin();
        d.supports.emplace_back(static_cast<VertexIndex>(idx), coefficient);
    }
    if (d.degree() != 0) {
        throw NonZeroDegree("divisor '" + name + "' has nonzero degree");
    }
    return d;
}

CombinatorialDivisor ProblemFile::combinatorial_divisor(const std::string& name) const {
    const auto it = divisors.find(name);
    if (it == divisors.end()) {
        throw InputError("no divisor named '" + name + "'", 0);
    }
    RatVector w = RatVector::Zero(static_cast<Eigen::Index>(vertices.size()));
    for (const auto& [vertex, coefficient] : it->second.weights) {
        const auto idx = std::find(vertices.begin(), vertices.end(), vertex) - vertices.begin();
        w(idx) += Rational(static_cast<long>(coefficient));
    }
    return CombinatorialDivisor(std::move(w));
}

OrderVector ProblemFile::order_vector() const {
    if (!orders) {
        throw InputError("the file declares no orders; pass --orders", 0);
    }
    std::vector<std::int64_t> m(divisor_basis.size(), 0);
    for (std::size_t i = 0; i < divisor_basis.size(); ++i) {
        if (const auto it = orders->find(divisor_basis[i]); it != orders->end()) {
            m[i] = it->second;
        }
    }
    return OrderVector(BoundaryBasis(divisor_basis), std::move(m));
}

std::map<std::string, std::int64_t> parse_inline_orders(const ProblemFile& problem, std::string_view text) {
    std::map<std::string, std::int64_t> out;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InputError("--orders expects name=value pairs, got '" + item + "'", 0);
        }
        const std::string name = item.substr(0, eq);
        if (std::find(problem.divisor_basis.begin(), problem.divisor_basis.end(), name) ==
            problem.divisor_basis.end()) {
            throw InputError("--orders names undeclared divisor '" + name + "'", 0);
        }
        std::int64_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw InputError("--orders value for '" + name + "' is not an integer", 0);
        }
        if (value < 0) {
            throw InputError("--orders value for '" + name + "' must be nonnegative", 0);
        }
        if (!out.emplace(name, value).second) {
            throw InputError("--orders repeats '" + name + "'", 0);
        }
    }
    return out;
}

} // namespace jumplab
