#include "fermisea/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fermisea::cli {

std::string format_number(double value) {
    if(std::isnan(value)) return "nan";
    if(std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if(value == 0.0) value = 0.0; // drop the sign of -0
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    if(ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return {buf.data(), end};
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if(first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view s, std::string_view context) {
    if(!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if(s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value))
        throw FormatError("cannot parse number '" + std::string(context) + "'");
    return value;
}

} // namespace

cplx parse_complex(std::string_view token) {
    std::string_view t = trim(token);
    const std::string_view whole = t;
    if(t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if(t.empty()) throw FormatError("empty matrix entry");
    if(t.back() != 'j') return {parse_real(t, whole), 0.0};

    t.remove_suffix(1);
    // Split at the last sign that is not an exponent sign and not leading.
    std::size_t split = std::string_view::npos;
    for(std::size_t i = t.size(); i-- > 1;) {
        if((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if(split == std::string_view::npos) {
        // pure imaginary; a bare "j" or "-j" means unit magnitude
        if(t.empty() || t == "+") return {0.0, 1.0};
        if(t == "-") return {0.0, -1.0};
        return {0.0, parse_real(t, whole)};
    }
    const std::string_view re = t.substr(0, split);
    std::string_view       im = t.substr(split);
    double                 imag;
    if(im == "+")
        imag = 1.0;
    else if(im == "-")
        imag = -1.0;
    else
        imag = parse_real(im, whole);
    return {parse_real(re, whole), imag};
}

CMatrix parse_matrix(std::istream &in) {
    std::string line;
    while(std::getline(in, line) && trim(line).empty()) {}
    if(trim(line).empty()) throw FormatError("matrix file is empty");
    const std::string_view head = trim(line);
    long long              dim  = 0;
    const auto [ptr, ec]        = std::from_chars(head.data(), head.data() + head.size(), dim);
    if(ec != std::errc{} || ptr != head.data() + head.size() || dim < 1 || dim > 100000)
        throw FormatError("first line must be the matrix dimension, got '" + std::string(head) + "'");

    CMatrix m(dim, dim);
    long long row = 0;
    while(row < dim && std::getline(in, line)) {
        if(trim(line).empty()) continue;
        std::istringstream tokens(line);
        std::string        tok;
        long long          col = 0;
        while(tokens >> tok) {
            if(col >= dim) throw FormatError("row " + std::to_string(row + 1) + " has more than " + std::to_string(dim) + " entries");
            m(row, col++) = parse_complex(tok);
        }
        if(col != dim) throw FormatError("row " + std::to_string(row + 1) + " has " + std::to_string(col) + " entries, expected " + std::to_string(dim));
        ++row;
    }
    if(row != dim) throw FormatError("expected " + std::to_string(dim) + " rows, found " + std::to_string(row));
    while(std::getline(in, line))
        if(!trim(line).empty()) throw FormatError("trailing content after the last matrix row");
    return m;
}

CMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if(!in) throw FormatError("cannot open '" + path + "'");
    return parse_matrix(in);
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    std::size_t         start = 0;
    while(start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        out.push_back(parse_real(piece, piece));
        if(comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<Index> parse_site_list(std::string_view text) {
    std::vector<Index> out;
    for(double v : parse_real_list(text)) {
        if(v < 1.0 || v != std::floor(v)) throw FormatError("site indices must be positive integers (1-based)");
        out.push_back(static_cast<Index>(v) - 1);
    }
    return out;
}

} // namespace fermisea::cli
