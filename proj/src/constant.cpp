#include "mills/constant.hpp"

#include <algorithm>

namespace mills {

namespace {

std::size_t common_prefix_digits(const std::string& a, const std::string& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t digits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) break;
        if (a[i] != '.') ++digits;
    }
    return digits;
}

}  // namespace

ConstantBracket bracket(const MillsChain& chain, std::size_t depth, std::uint32_t scale) {
    if (chain.c() != 3)
        throw std::invalid_argument("bracket: cube-root bracketing needs exponent c = 3");
    if (depth < 1 || depth > chain.size())
        throw std::invalid_argument("bracket: depth out of range");

    FixedPoint lower = FixedPoint::from_integer(chain.term(depth - 1));
    FixedPoint upper = FixedPoint::from_integer(chain.term(depth - 1) + 1);
    for (std::size_t i = 0; i < depth; ++i) {
        lower = cbrt_directed(lower, scale, Rounding::Down);
        upper = cbrt_directed(upper, scale, Rounding::Up);
    }
    ConstantBracket out{lower, upper, scale,
                        common_prefix_digits(lower.to_string(), upper.to_string())};
    if (out.guaranteed_digits == 0)
        throw PrecisionTooLow("bracket at depth " + std::to_string(depth) + ", scale " +
                              std::to_string(scale) + " pins no digits");
    return out;
}

DigitsResult constant_digits(const MillsChain& chain, std::size_t requested) {
    if (requested < 1) requested = 1;
    const std::size_t n_terms = chain.size();

    std::size_t depth = n_terms;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        if (dec_digits(chain.term(n - 1)) >= requested + 2) {
            depth = n;
            break;
        }
    }

    for (;;) {
        const std::uint32_t scale = static_cast<std::uint32_t>(requested + 10 * depth);
        std::size_t guaranteed = 0;
        std::string lower_str;
        try {
            ConstantBracket br = bracket(chain, depth, scale);
            guaranteed = br.guaranteed_digits;
            lower_str = br.lower.to_string();
        } catch (const PrecisionTooLow&) {
            guaranteed = 0;
        }
        if (guaranteed >= requested || depth == n_terms) {
            std::size_t give = std::min(requested, guaranteed);
            return {digit_prefix(lower_str, give), guaranteed, depth, scale,
                    guaranteed < requested};
        }
        ++depth;
    }
}

std::size_t digit_length(const std::string& digits) {
    std::size_t n = 0;
    for (char ch : digits)
        if (ch != '.') ++n;
    return n;
}

std::string digit_prefix(const std::string& digits, std::size_t n) {
    std::string out;
    for (char ch : digits) {
        if (ch != '.' && n == 0) break;
        out.push_back(ch);
        if (ch != '.') --n;
    }
    while (!out.empty() && out.back() == '.') out.pop_back();
    return out;
}

const std::string& reference_digits() {
    // 1. + 600 fractional digits, rows of five 10-digit groups.
    static const std::string value = [] {
        static const char* rows[] = {
            "3063778838 6308069046 8614492602 6057129167 8458515671",
            "3644368053 7599664340 5376682659 8821501403 7011973957",
            "0729696093 8103086882 2388614478 1635348688 7133922146",
            "1943534578 7110033188 1405093575 3558319326 4801721383",
            "2361522359 0622186016 1085667905 7215197976 0951619929",
            "5279707992 5631721527 8412371307 6584911245 6317518426",
            "3310565215 3513186684 1550790793 7238592335 2208421842",
            "0405320517 6890260257 9344300869 5290636205 6989687262",
            "1227499787 6664385157 6619143877 2844982077 5905648255",
            "6091500412 3788524793 6260880466 8815406437 4425340131",
            "0736114409 4137650364 3793012676 7211713103 0265228386",
            "6154666880 4874760951 4410790754 0698417260 3473107746",
        };
        std::string s = "1.";
        for (const char* row : rows)
            for (const char* p = row; *p; ++p)
                if (*p != ' ') s.push_back(*p);
        return s;
    }();
    return value;
}

std::string format_grouped(const std::string& digits) {
    std::string flat;
    for (char ch : digits)
        if (ch != '.') flat.push_back(ch);
    if (flat.empty()) return "";

    std::string out;
    out += flat[0];
    out += '.';
    std::size_t i = 1;
    std::size_t group_in_row = 0;
    while (i < flat.size()) {
        std::size_t take = std::min<std::size_t>(10, flat.size() - i);
        out.append(flat, i, take);
        i += take;
        ++group_in_row;
        if (i < flat.size()) {
            if (group_in_row == 5) {
                out += '\n';
                group_in_row = 0;
            } else {
                out += ' ';
            }
        }
    }
    out += '\n';
    return out;
}

}  // namespace mills
