#include "legstir/partitions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace legstir {

std::size_t LSPartition::barred_in_zero_box() const {
    return static_cast<std::size_t>(
        std::count_if(zero_box.begin(), zero_box.end(), [](const Element& e) { return e.barred; }));
}

void LSPartition::normalize() {
    for (Box& b : boxes) std::sort(b.begin(), b.end());
    std::sort(zero_box.begin(), zero_box.end());
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        if (a.empty() || b.empty()) return b.empty() && !a.empty();
        return a.front().value < b.front().value;
    });
}

namespace {

std::string elem_str(const Element& e) { return std::to_string(e.value) + (e.barred ? "'" : ""); }

std::string box_str(const Box& b, char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ',';
        s += elem_str(b[i]);
    }
    return s + close;
}

void check_size(int n) {
    if (n < 1 || n > max_enumeration_n)
        throw std::out_of_range("partition enumeration supports 1 <= n <= " +
                                std::to_string(max_enumeration_n) + ", got " + std::to_string(n));
}

void grow(LSPartition& p, int target, const std::function<void(const LSPartition&)>& visit) {
    if (p.n == target) {
        visit(p);
        return;
    }
    const int v = p.n + 1;
    const Element plain{v, false};
    const Element bar{v, true};
    const std::size_t k = p.boxes.size();
    p.n = v;

    // Both copies open a new last box.
    p.boxes.push_back(Box{plain, bar});
    grow(p, target, visit);
    p.boxes.pop_back();

    // Split across two different nonzero boxes.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            p.boxes[i].push_back(plain);
            p.boxes[j].push_back(bar);
            grow(p, target, visit);
            p.boxes[i].pop_back();
            p.boxes[j].pop_back();
        }
    }

    // One copy in a nonzero box, the other in the zero box.
    for (std::size_t s = 0; s < k; ++s) {
        for (bool barred_in_box : {false, true}) {
            p.boxes[s].push_back(barred_in_box ? bar : plain);
            p.zero_box.push_back(barred_in_box ? plain : bar);
            grow(p, target, visit);
            p.boxes[s].pop_back();
            p.zero_box.pop_back();
        }
    }
    p.n = v - 1;
}

}  // namespace

std::optional<std::string> find_violation(const LSPartition& p) {
    if (p.n < 1) return "n must be at least 1";
    // seen[v][barred]
    std::vector<std::array<int, 2>> seen(static_cast<std::size_t>(p.n) + 1, {0, 0});
    auto record = [&](const Element& e) -> std::optional<std::string> {
        if (e.value < 1 || e.value > p.n) return "element " + elem_str(e) + " outside M_" + std::to_string(p.n);
        if (++seen[static_cast<std::size_t>(e.value)][e.barred ? 1 : 0] > 1)
            return "element " + elem_str(e) + " occurs more than once";
        return std::nullopt;
    };
    for (const Box& b : p.boxes)
        for (const Element& e : b)
            if (auto err = record(e)) return err;
    for (const Element& e : p.zero_box)
        if (auto err = record(e)) return err;
    for (int v = 1; v <= p.n; ++v) {
        const auto& s = seen[static_cast<std::size_t>(v)];
        if (!s[0] || !s[1]) return "element " + elem_str({v, !s[1]}) + " is missing";
    }

    auto has_both = [](const Box& b, int v) {
        return std::count_if(b.begin(), b.end(), [v](const Element& e) { return e.value == v; }) == 2;
    };

    for (const Element& e : p.zero_box)
        if (has_both(p.zero_box, e.value))
            return "r1: zero box holds both copies of " + std::to_string(e.value);

    int previous_min = 0;
    for (std::size_t i = 0; i < p.boxes.size(); ++i) {
        const Box& b = p.boxes[i];
        const std::string label = "box " + std::to_string(i + 1);
        if (b.empty()) return "r2: " + label + " is empty";
        const int lo = std::min_element(b.begin(), b.end(), [](const Element& x, const Element& y) {
                           return x.value < y.value;
                       })->value;
        if (!has_both(b, lo)) return "r2: " + label + " lacks both copies of its minimum " + std::to_string(lo);
        for (const Element& e : b)
            if (e.value != lo && has_both(b, e.value))
                return "r2: " + label + " holds both copies of non-minimum " + std::to_string(e.value);
        if (lo <= previous_min) return "standard form: " + label + " is out of order";
        previous_min = lo;
    }
    return std::nullopt;
}

std::string to_string(const LSPartition& p) {
    std::string s;
    for (const Box& b : p.boxes) s += box_str(b, '{', '}');
    return s + box_str(p.zero_box, '<', '>');
}

LSPartition parse_partition(std::string_view text) {
    LSPartition p;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad partition at offset " + std::to_string(pos) + ": " + why);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool have_zero = false;
    skip_ws();
    while (pos < text.size()) {
        const char open = text[pos];
        if (open != '{' && open != '<') fail("expected '{' or '<'");
        if (have_zero) fail("zero box must come last");
        const char close = open == '{' ? '}' : '>';
        ++pos;
        Box box;
        skip_ws();
        while (pos < text.size() && text[pos] != close) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected a number");
            Element e{std::stoi(std::string(text.substr(start, pos - start))), false};
            if (pos < text.size() && text[pos] == '\'') {
                e.barred = true;
                ++pos;
            }
            box.push_back(e);
            p.n = std::max(p.n, e.value);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size()) fail("unterminated box");
        ++pos;
        std::sort(box.begin(), box.end());
        if (open == '{') {
            p.boxes.push_back(std::move(box));
        } else {
            p.zero_box = std::move(box);
            have_zero = true;
        }
        skip_ws();
    }
    if (!have_zero) fail("missing zero box");
    return p;
}

void for_each_partition(int n, const std::function<void(const LSPartition&)>& visit) {
    check_size(n);
    LSPartition p;
    p.n = 1;
    p.boxes.push_back(Box{{1, false}, {1, true}});
    grow(p, n, [&](const LSPartition& q) {
        LSPartition copy = q;
        copy.normalize();
        visit(copy);
    });
}

std::vector<LSPartition> enumerate_partitions(int n) {
    std::vector<LSPartition> out;
    for_each_partition(n, [&](const LSPartition& p) { out.push_back(p); });
    return out;
}

std::map<std::size_t, Int> count_by_blocks(int n) {
    std::map<std::size_t, Int> hist;
    for_each_partition(n, [&](const LSPartition& p) { hist[p.block_count()] += 1; });
    return hist;
}

ZPoly js_brute(int n, std::size_t k) {
    std::vector<Int> counts;
    for_each_partition(n, [&](const LSPartition& p) {
        if (p.block_count() != k) return;
        const std::size_t i = p.barred_in_zero_box();
        if (counts.size() <= i) counts.resize(i + 1);
        counts[i] += 1;
    });
    return ZPoly(std::move(counts));
}

}  // namespace legstir
