#include "lopcc/instance.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace lopcc {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    if (n < 1) throw std::invalid_argument("permutation must not be empty");
    std::vector<char> seen(n, 0);
    for (int v : order_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("permutation is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return Permutation(std::move(order));
}

Instance::Instance(std::string name, std::vector<double> weights,
                   std::vector<double> costs)
    : name_(std::move(name)),
      n_(static_cast<int>(weights.size())),
      d_(std::move(weights)),
      c_(std::move(costs)) {
    if (n_ < 1) throw std::invalid_argument("instance needs at least one vertex");
    if (c_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("cost matrix size does not match n");
    for (double w : d_)
        if (!(w >= 0.0)) throw std::invalid_argument("negative vertex weight");
    for (double c : c_)
        if (!(c >= 0.0)) throw std::invalid_argument("negative arc cost");
    for (int u = 0; u < n_; ++u) c_[static_cast<std::size_t>(u) * n_ + u] = 0.0;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

// Tokenizes the whole stream, dropping '#' comments, and remembers the first
// line's raw text so it can serve as the instance name.
struct TokenReader {
    std::vector<Token> tokens;
    std::string first_line;
    int first_line_no = 0;
    std::size_t next = 0;
    int last_line = 1;

    explicit TokenReader(std::istream& in) {
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            bool has_token = false;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                if (i >= line.size()) break;
                std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                tokens.push_back({line.substr(start, i - start), line_no,
                                  static_cast<int>(start) + 1});
                has_token = true;
            }
            if (has_token && first_line_no == 0) {
                std::size_t b = line.find_first_not_of(" \t\r");
                std::size_t e = line.find_last_not_of(" \t\r");
                first_line = line.substr(b, e - b + 1);
                first_line_no = line_no;
            }
            last_line = line_no;
        }
    }

    const Token& require(const char* what) {
        if (next >= tokens.size())
            throw ParseError(last_line, 1,
                             std::string("unexpected end of input, expected ") + what);
        return tokens[next++];
    }

    bool exhausted() const { return next >= tokens.size(); }
};

bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

// Reads one nonnegative number, reporting the offending token on failure.
double require_number(TokenReader& reader, const char* what, const Token** where = nullptr) {
    const Token& tok = reader.require(what);
    if (where) *where = &tok;
    double value;
    if (!parse_double(tok.text, value))
        throw ParseError(tok.line, tok.column,
                         "expected " + std::string(what) + ", got '" + tok.text + "'");
    if (value < 0.0)
        throw ParseError(tok.line, tok.column,
                         std::string(what) + " must be nonnegative");
    return value;
}

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
    TokenReader reader(in);
    if (reader.tokens.empty()) throw ParseError(1, 1, "empty instance");

    // Optional name line: first line taken whole when its first token is not
    // a number.
    std::string name;
    double probe;
    if (!parse_double(reader.tokens[0].text, probe)) {
        name = reader.first_line;
        const int name_line = reader.tokens[0].line;
        while (!reader.exhausted() && reader.tokens[reader.next].line == name_line)
            ++reader.next;
    }

    const Token& n_tok = reader.require("vertex count n");
    long long n_ll;
    {
        const char* b = n_tok.text.data();
        const char* e = b + n_tok.text.size();
        auto [ptr, ec] = std::from_chars(b, e, n_ll);
        if (ec != std::errc() || ptr != e)
            throw ParseError(n_tok.line, n_tok.column,
                             "vertex count must be an integer, got '" + n_tok.text + "'");
    }
    if (n_ll < 1)
        throw ParseError(n_tok.line, n_tok.column, "vertex count must be >= 1");
    if (n_ll > 100000)
        throw ParseError(n_tok.line, n_tok.column, "vertex count is implausibly large");
    const int n = static_cast<int>(n_ll);

    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = require_number(reader, "vertex weight");

    std::vector<double> c(static_cast<std::size_t>(n) * n);
    std::vector<std::string> warnings;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const Token* tok = nullptr;
            const double value = require_number(reader, "arc cost", &tok);
            if (u == v && value != 0.0)
                warnings.push_back("nonzero diagonal entry C[" + std::to_string(u + 1) +
                                   "][" + std::to_string(u + 1) + "] = " + tok->text +
                                   " forced to 0 (line " + std::to_string(tok->line) + ")");
            c[static_cast<std::size_t>(u) * n + v] = value;
        }
    }

    if (!reader.exhausted()) {
        const Token& tok = reader.tokens[reader.next];
        throw ParseError(tok.line, tok.column,
                         "trailing token '" + tok.text + "' after cost matrix");
    }

    return {Instance(std::move(name), std::move(d), std::move(c)), std::move(warnings)};
}

ParsedInstance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    try {
        return parse_instance(in);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

namespace {

std::string shortest_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

bool looks_numeric(const std::string& s) {
    double probe;
    std::size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) return false;
    std::size_t end = s.find_first_of(" \t", start);
    return parse_double(s.substr(start, end - start), probe);
}

}  // namespace

std::string write_instance(const Instance& inst) {
    std::string out;
    const int n = inst.size();
    if (!inst.name().empty() && !looks_numeric(inst.name()) &&
        inst.name().find('#') == std::string::npos &&
        inst.name().find('\n') == std::string::npos) {
        out += inst.name();
        out += '\n';
    }
    out += std::to_string(n);
    out += '\n';
    for (int i = 0; i < n; ++i) {
        if (i) out += ' ';
        out += shortest_double(inst.weight(i));
    }
    out += '\n';
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v) out += ' ';
            out += shortest_double(inst.cost(u, v));
        }
        out += '\n';
    }
    return out;
}

Instance generate_random_instance(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("instance needs at least one vertex");
    Rng rng(seed);
    std::vector<double> d(n);
    for (double& w : d) w = rng.next_double();
    std::vector<double> c(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            c[static_cast<std::size_t>(u) * n + v] = (u == v) ? 0.0 : rng.next_double();
    std::string name = "random-n" + std::to_string(n) + "-seed" + std::to_string(seed);
    return Instance(std::move(name), std::move(d), std::move(c));
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = rng.next_index(i + 1);
        std::swap(order[i], order[j]);
    }
    return Permutation(std::move(order));
}

}  // namespace lopcc
