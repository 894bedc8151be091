#include "dyngal/perm.hpp"

#include <algorithm>
#include <cctype>

namespace dyngal {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw ParseError("permutation image table is not a bijection");
        seen[v] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch();
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
    return Permutation::unchecked(std::move(img));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[a(i)] = i;
    return Permutation::unchecked(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& by) {
    return compose(inverse(by), compose(g, by));
}

CyclePattern cycle_pattern(const Permutation& g) {
    CyclePattern out;
    std::vector<char> seen(g.degree(), 0);
    for (int i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = g(j);
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int parity(const Permutation& g) {
    int par = 0;
    std::vector<char> seen(g.degree(), 0);
    for (int i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = g(j);
            ++len;
        }
        par ^= (len - 1) & 1;
    }
    return par;
}

int count_fixed_points(const Permutation& g) {
    int n = 0;
    for (int i = 0; i < g.degree(); ++i)
        if (g(i) == i) ++n;
    return n;
}

std::string to_cycle_string(const Permutation& g) {
    std::string out;
    std::vector<char> seen(g.degree(), 0);
    for (int i = 0; i < g.degree(); ++i) {
        if (seen[i] || g(i) == i) {
            seen[i] = 1;
            continue;
        }
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            seen[j] = 1;
            j = g(j);
            first = false;
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation parse_permutation(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::vector<char> used(degree, 0);
    for (int i = 0; i < degree; ++i) img[i] = i;

    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected point number in cycle notation");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            if (v < 1 || v > degree) throw ParseError("cycle point out of range");
            if (used[v - 1]) throw ParseError("point repeated across cycles");
            used[v - 1] = 1;
            cyc.push_back(v - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size()) throw ParseError("unterminated cycle");
        ++pos; // ')'
        for (size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty permutation literal");
    return Permutation::unchecked(std::move(img));
}

} // namespace dyngal
