#include "bifix/io.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "bifix/errors.hpp"
#include "bifix/freeness.hpp"

namespace bifix {

namespace {

// Whitespace-delimited token reader that tracks line numbers and strips
// `#` comments to end of line.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    int line() const { return line_; }

    bool next(std::string& out) {
        while (true) {
            if (pos_ >= current_.size()) {
                if (!std::getline(in_, current_)) return false;
                ++line_;
                pos_ = 0;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(current_[pos_]))) {
                ++pos_;
                continue;
            }
            if (current_[pos_] == '#') {
                pos_ = current_.size();
                continue;
            }
            std::size_t start = pos_;
            while (pos_ < current_.size() &&
                   !std::isspace(static_cast<unsigned char>(current_[pos_])) )
                ++pos_;
            out = current_.substr(start, pos_ - start);
            return true;
        }
    }

    std::string expect(const std::string& what) {
        std::string tok;
        if (!next(tok)) throw parse_error(line_, "unexpected end of input, expected " + what);
        return tok;
    }

    long long expect_int(const std::string& what) {
        std::string tok = expect(what);
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw parse_error(line_, "expected " + what + ", got '" + tok + "'");
        }
    }

    void expect_keyword(const std::string& kw) {
        std::string tok = expect("'" + kw + "'");
        if (tok != kw) throw parse_error(line_, "expected '" + kw + "', got '" + tok + "'");
    }

private:
    std::istream& in_;
    std::string current_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

} // namespace

Dfa parse_dfa(std::istream& in) {
    TokenReader r(in);
    r.expect_keyword("dfa");
    r.expect_keyword("v1");

    r.expect_keyword("states");
    long long n = r.expect_int("state count");
    if (n <= 0) throw parse_error(r.line(), "state count must be positive");

    r.expect_keyword("symbols");
    long long k = r.expect_int("symbol count");
    if (k < 0) throw parse_error(r.line(), "symbol count must be non-negative");
    std::vector<std::string> names;
    std::map<std::string, bool> seen;
    for (long long i = 0; i < k; ++i) {
        std::string name = r.expect("symbol name");
        if (seen.count(name)) throw parse_error(r.line(), "duplicate symbol: " + name);
        seen[name] = true;
        names.push_back(std::move(name));
    }

    r.expect_keyword("initial");
    long long initial = r.expect_int("initial state");
    if (initial < 0 || initial >= n) throw parse_error(r.line(), "initial state out of range");

    r.expect_keyword("finals");
    long long fcount = r.expect_int("final count");
    if (fcount < 0 || fcount > n) throw parse_error(r.line(), "final count out of range");
    std::vector<State> finals;
    for (long long i = 0; i < fcount; ++i) {
        long long f = r.expect_int("final state");
        if (f < 0 || f >= n) throw parse_error(r.line(), "final state out of range");
        finals.push_back(static_cast<State>(f));
    }

    r.expect_keyword("delta");
    std::vector<State> delta;
    delta.reserve(static_cast<std::size_t>(n) * k);
    for (long long q = 0; q < n; ++q) {
        for (long long a = 0; a < k; ++a) {
            std::string tok = r.expect("transition row for state " + std::to_string(q));
            if (tok == "end")
                throw parse_error(r.line(), "transition table ends early: missing row for state " +
                                                std::to_string(q));
            long long t;
            try {
                std::size_t used = 0;
                t = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error(r.line(), "expected a target in the row of state " +
                                                std::to_string(q) + ", got '" + tok + "'");
            }
            if (t < 0 || t >= n)
                throw parse_error(r.line(), "target out of range in the row of state " +
                                                std::to_string(q));
            delta.push_back(static_cast<State>(t));
        }
    }
    r.expect_keyword("end");

    try {
        return Dfa(static_cast<int>(n), std::move(names), std::move(delta),
                   static_cast<State>(initial), std::move(finals));
    } catch (const input_error& e) {
        throw parse_error(r.line(), e.what());
    }
}

Dfa parse_dfa(const std::string& text) {
    std::istringstream in(text);
    return parse_dfa(in);
}

std::string serialize_dfa(const Dfa& d) {
    std::ostringstream out;
    out << "dfa v1\n";
    out << "states " << d.state_count() << "\n";
    out << "symbols " << d.symbol_count();
    for (const std::string& name : d.alphabet()) out << " " << name;
    out << "\n";
    out << "initial " << d.initial() << "\n";
    out << "finals " << d.finals().size();
    for (State f : d.finals()) out << " " << f;
    out << "\n";
    out << "delta\n";
    for (State q = 0; q < d.state_count(); ++q) {
        for (int a = 0; a < d.symbol_count(); ++a) {
            if (a) out << " ";
            out << d.next(q, a);
        }
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

std::string export_dot(const Dfa& d) {
    std::ostringstream out;
    std::optional<State> dead = find_empty_state(d);

    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point, label=\"\"];\n";
    for (State q = 0; q < d.state_count(); ++q) {
        out << "  " << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle");
        if (dead && *dead == q) out << ", style=dashed, xlabel=\"empty\"";
        out << "];\n";
    }
    out << "  __start -> " << d.initial() << ";\n";
    for (State q = 0; q < d.state_count(); ++q) {
        // group symbols by target, keeping first-symbol order of targets
        std::vector<std::pair<State, std::string>> grouped;
        for (int a = 0; a < d.symbol_count(); ++a) {
            State t = d.next(q, a);
            bool found = false;
            for (auto& [tgt, label] : grouped) {
                if (tgt == t) {
                    label += "," + d.symbol_name(a);
                    found = true;
                    break;
                }
            }
            if (!found) grouped.emplace_back(t, d.symbol_name(a));
        }
        for (const auto& [tgt, label] : grouped)
            out << "  " << q << " -> " << tgt << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace bifix
