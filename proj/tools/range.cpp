#include "range.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "hermspace/errors.hpp"

namespace hermspace::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        parts.push_back(text.substr(start, at == std::string::npos ? std::string::npos : at - start));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    return parts;
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    throw DomainError("invalid sweep '" + text + "': " + why);
}

double parse_number(const std::string& token, const std::string& whole) {
    if (token.empty()) bad(whole, "empty value");
    const std::size_t slash = token.find('/');
    if (slash != std::string::npos) {
        const double num = parse_number(token.substr(0, slash), whole);
        const double den = parse_number(token.substr(slash + 1), whole);
        if (den == 0.0) bad(whole, "zero denominator");
        return num / den;
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
        bad(whole, "cannot parse '" + token + "'");
    }
    return value;
}

std::size_t parse_count(const std::string& token, const std::string& whole) {
    const double value = parse_number(token, whole);
    if (value < 0.0 || value != std::floor(value) || value > 1e15) {
        bad(whole, "'" + token + "' is not a non-negative integer");
    }
    return static_cast<std::size_t>(value);
}

struct RangeItem {
    std::string lo;
    std::string hi;
    std::string spacing;  // "", "log" or "lin"
    std::size_t points = 0;
};

bool parse_range(const std::string& item, const std::string& whole, RangeItem& out) {
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) return false;
    out.lo = item.substr(0, dots);
    std::string rest = item.substr(dots + 2);
    const std::size_t colon = rest.find(':');
    if (colon != std::string::npos) {
        const std::string spec = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
        if (spec.rfind("log", 0) == 0) {
            out.spacing = "log";
        } else if (spec.rfind("lin", 0) == 0) {
            out.spacing = "lin";
        } else {
            bad(whole, "spacing must be logK or linK");
        }
        out.points = parse_count(spec.substr(3), whole);
        if (out.points < 1) bad(whole, "need at least one point");
    }
    out.hi = rest;
    return true;
}

std::vector<double> spaced(double lo, double hi, const RangeItem& r, const std::string& whole) {
    std::vector<double> values;
    if (r.points == 1) return {lo};
    if (r.spacing == "log") {
        if (!(lo > 0.0)) bad(whole, "log spacing needs a positive start");
        const double a = std::log(lo);
        const double b = std::log(hi);
        for (std::size_t k = 0; k < r.points; ++k) {
            values.push_back(k + 1 == r.points ? hi : std::exp(a + (b - a) * k / (r.points - 1.0)));
        }
    } else {
        for (std::size_t k = 0; k < r.points; ++k) {
            values.push_back(k + 1 == r.points ? hi : lo + (hi - lo) * k / (r.points - 1.0));
        }
    }
    return values;
}

}  // namespace

std::vector<std::size_t> parse_int_sweep(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::string& item : split(text, ',')) {
        RangeItem r;
        if (!parse_range(item, text, r)) {
            out.push_back(parse_count(item, text));
            continue;
        }
        const std::size_t lo = parse_count(r.lo, text);
        const std::size_t hi = parse_count(r.hi, text);
        if (hi < lo) bad(text, "range end precedes its start");
        if (r.spacing.empty()) {
            if (hi - lo > 10000000) bad(text, "range too long");
            for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
            continue;
        }
        for (double v : spaced(static_cast<double>(lo), static_cast<double>(hi), r, text)) {
            const auto rounded = static_cast<std::size_t>(std::llround(v));
            if (std::find(out.begin(), out.end(), rounded) == out.end()) out.push_back(rounded);
        }
    }
    if (out.empty()) bad(text, "no values");
    return out;
}

std::vector<double> parse_real_sweep(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split(text, ',')) {
        RangeItem r;
        if (!parse_range(item, text, r)) {
            out.push_back(parse_number(item, text));
            continue;
        }
        const double lo = parse_number(r.lo, text);
        const double hi = parse_number(r.hi, text);
        if (hi < lo) bad(text, "range end precedes its start");
        if (r.spacing.empty()) {
            if (hi - lo > 1e7) bad(text, "range too long");
            for (double v = lo; v <= hi + 1e-9; v += 1.0) out.push_back(v);
            continue;
        }
        const std::vector<double> values = spaced(lo, hi, r, text);
        out.insert(out.end(), values.begin(), values.end());
    }
    if (out.empty()) bad(text, "no values");
    return out;
}

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace hermspace::cli
