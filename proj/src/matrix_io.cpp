// SPDX-License-Identifier: Apache-2.0
#include "schatten/matrix_io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace schatten {

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: square matrix required");
    const std::size_t n = m.rows();
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json rrow = nlohmann::json::array(), irow = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return {{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("matrix_from_json: n >= 1 required");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != n || im.size() != n) throw std::invalid_argument("matrix_from_json: row count mismatch");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (re[i].size() != n || im[i].size() != n)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (std::size_t jj = 0; jj < n; ++jj)
            m(i, jj) = cdouble(re[i][jj].get<double>(), im[i][jj].get<double>());
    }
    if (!m.all_finite()) throw std::invalid_argument("matrix_from_json: entries must be finite");
    return m;
}

std::string matrix_json_text(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_json_text: square matrix required");
    const std::size_t n = m.rows();
    auto block = [&](bool imag_part) {
        std::string out = "[";
        for (std::size_t i = 0; i < n; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ',';
                out += fmt_g17(imag_part ? m(i, j).imag() : m(i, j).real());
            }
            out += ']';
        }
        return out + "]";
    };
    return "{\"n\":" + std::to_string(n) + ",\"re\":" + block(false) + ",\"im\":" + block(true) + "}";
}

std::string parameter_hash(const nlohmann::json& j) {
    const std::string dump = j.dump();
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace schatten
