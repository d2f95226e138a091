#include "legstir/codes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace legstir {

std::size_t count_x(const CLSSequence& seq) {
    return static_cast<std::size_t>(std::count_if(
        seq.begin(), seq.end(), [](const CLSSymbol& s) { return s.kind == CLSSymbol::Kind::x; }));
}

std::optional<CodeViolation> find_code_violation(const CLSSequence& seq) {
    if (seq.empty()) return CodeViolation{0, "empty sequence"};
    int xs = 0;
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        const CLSSymbol& s = seq[pos];
        if (pos == 0 && s.kind != CLSSymbol::Kind::x) return CodeViolation{0, "first symbol must be X"};
        auto in_range = [xs](int idx) { return idx >= 1 && idx <= xs; };
        switch (s.kind) {
            case CLSSymbol::Kind::x:
                ++xs;
                break;
            case CLSSymbol::Kind::a:
                if (s.i == s.j) return CodeViolation{pos, "A indices must differ"};
                if (!in_range(s.i) || !in_range(s.j))
                    return CodeViolation{pos, "A index exceeds X count " + std::to_string(xs)};
                break;
            case CLSSymbol::Kind::b:
            case CLSSymbol::Kind::b_bar:
                if (!in_range(s.i)) return CodeViolation{pos, "B index exceeds X count " + std::to_string(xs)};
                break;
        }
    }
    return std::nullopt;
}

std::string to_string(const CLSSequence& seq) {
    std::string out;
    for (std::size_t p = 0; p < seq.size(); ++p) {
        if (p) out += ',';
        const CLSSymbol& s = seq[p];
        switch (s.kind) {
            case CLSSymbol::Kind::x: out += "X"; break;
            case CLSSymbol::Kind::a: out += "A(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")"; break;
            case CLSSymbol::Kind::b: out += "B(" + std::to_string(s.i) + ")"; break;
            case CLSSymbol::Kind::b_bar: out += "Bb(" + std::to_string(s.i) + ")"; break;
        }
    }
    return out;
}

CLSSequence parse_code(std::string_view text) {
    CLSSequence seq;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad code at offset " + std::to_string(pos) + ": " + why);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    };
    auto number = [&] {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an index");
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (pos == text.size()) return seq;
    while (true) {
        skip_ws();
        if (text.substr(pos, 2) == "Bb") {
            pos += 2;
            expect('(');
            seq.push_back(CLSSymbol::Bbar(number()));
            expect(')');
        } else if (text.substr(pos, 1) == "B") {
            ++pos;
            expect('(');
            seq.push_back(CLSSymbol::B(number()));
            expect(')');
        } else if (text.substr(pos, 1) == "A") {
            ++pos;
            expect('(');
            const int i = number();
            expect(',');
            const int j = number();
            expect(')');
            seq.push_back(CLSSymbol::A(i, j));
        } else if (text.substr(pos, 1) == "X") {
            ++pos;
            seq.push_back(CLSSymbol::X());
        } else {
            fail("unknown token");
        }
        skip_ws();
        if (pos == text.size()) break;
        expect(',');
    }
    return seq;
}

LSPartition phi(const CLSSequence& seq) {
    if (auto v = find_code_violation(seq))
        throw std::invalid_argument("invalid code at position " + std::to_string(v->position + 1) + ": " +
                                    v->reason);
    LSPartition p;
    for (const CLSSymbol& s : seq) {
        const int m = ++p.n;
        const Element plain{m, false};
        const Element bar{m, true};
        auto box = [&](int idx) -> Box& { return p.boxes[static_cast<std::size_t>(idx - 1)]; };
        switch (s.kind) {
            case CLSSymbol::Kind::x:
                p.boxes.push_back(Box{plain, bar});
                break;
            case CLSSymbol::Kind::a:
                box(s.i).push_back(plain);
                box(s.j).push_back(bar);
                break;
            case CLSSymbol::Kind::b:
                box(s.i).push_back(plain);
                p.zero_box.push_back(bar);
                break;
            case CLSSymbol::Kind::b_bar:
                box(s.i).push_back(bar);
                p.zero_box.push_back(plain);
                break;
        }
    }
    p.normalize();
    return p;
}

CLSSequence phi_inverse(const LSPartition& p) {
    if (auto why = find_violation(p)) throw std::invalid_argument("invalid partition: " + *why);
    LSPartition rest = p;
    CLSSequence reversed;
    reversed.reserve(static_cast<std::size_t>(p.n));

    // Position of an element: 1-based box index, or 0 for the zero box.
    auto take = [&rest](const Element& e) -> int {
        for (std::size_t b = 0; b < rest.boxes.size(); ++b) {
            auto it = std::find(rest.boxes[b].begin(), rest.boxes[b].end(), e);
            if (it != rest.boxes[b].end()) {
                rest.boxes[b].erase(it);
                return static_cast<int>(b + 1);
            }
        }
        auto it = std::find(rest.zero_box.begin(), rest.zero_box.end(), e);
        if (it == rest.zero_box.end()) throw std::logic_error("element vanished during peeling");
        rest.zero_box.erase(it);
        return 0;
    };

    for (int m = p.n; m >= 1; --m) {
        const int plain_at = take({m, false});
        const int bar_at = take({m, true});
        if (plain_at == bar_at) {
            // Only the last box can have m as its minimum.
            if (static_cast<std::size_t>(plain_at) != rest.boxes.size() || !rest.boxes.back().empty())
                throw std::logic_error("box opened by " + std::to_string(m) + " is not a bare last box");
            rest.boxes.pop_back();
            reversed.push_back(CLSSymbol::X());
        } else if (plain_at != 0 && bar_at != 0) {
            reversed.push_back(CLSSymbol::A(plain_at, bar_at));
        } else if (bar_at == 0) {
            reversed.push_back(CLSSymbol::B(plain_at));
        } else {
            reversed.push_back(CLSSymbol::Bbar(bar_at));
        }
        --rest.n;
    }
    return {reversed.rbegin(), reversed.rend()};
}

Int non_x_choices(std::size_t t) {
    Int tt(t);
    Int r = tt * (tt - 1) + 2 * tt;
    return r;
}

namespace {

void extend(CLSSequence& seq, int xs, int target, const std::function<void(const CLSSequence&)>& visit) {
    if (static_cast<int>(seq.size()) == target) {
        visit(seq);
        return;
    }
    auto recurse = [&](CLSSymbol s, int new_xs) {
        seq.push_back(s);
        extend(seq, new_xs, target, visit);
        seq.pop_back();
    };
    recurse(CLSSymbol::X(), xs + 1);
    for (int i = 1; i <= xs; ++i)
        for (int j = 1; j <= xs; ++j)
            if (i != j) recurse(CLSSymbol::A(i, j), xs);
    for (int s = 1; s <= xs; ++s) {
        recurse(CLSSymbol::B(s), xs);
        recurse(CLSSymbol::Bbar(s), xs);
    }
}

}  // namespace

void for_each_code(int n, const std::function<void(const CLSSequence&)>& visit) {
    if (n < 1 || n > max_enumeration_n)
        throw std::out_of_range("code enumeration supports 1 <= n <= " + std::to_string(max_enumeration_n));
    CLSSequence seq{CLSSymbol::X()};
    extend(seq, 1, n, visit);
}

Int count_codes_exhaustive(int n, std::size_t k) {
    Int count = 0;
    for_each_code(n, [&](const CLSSequence& seq) {
        if (count_x(seq) == k) count += 1;
    });
    return count;
}

Int count_codes(std::size_t n, std::size_t k) {
    if (n == 0) return 0;
    // ways[t]: number of valid prefixes of the current length with t X's.
    std::vector<Int> ways(n + 1);
    ways[1] = 1;
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<Int> next(n + 1);
        for (std::size_t t = 1; t <= len; ++t) {
            if (ways[t] == 0) continue;
            next[t + 1] += ways[t];
            next[t] += ways[t] * non_x_choices(t);
        }
        ways = std::move(next);
    }
    return k <= n ? ways[k] : Int(0);
}

}  // namespace legstir
