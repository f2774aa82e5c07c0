#include "ncomplex/serialize.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ncomplex/errors.hpp"

namespace ncx {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw precondition_error(path + ": " + what);
}

long long get_int(const ordered_json& j, const std::string& path, long long lo, long long hi) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi)
        bad(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    return v;
}

}  // namespace

std::string tensor_to_json(const PolyTensor& T) {
    ordered_json out;
    out["format"] = 1;
    out["D"] = T.D;
    out["degree"] = T.degree;
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : T.terms) {
        ordered_json t;
        t["indices"] = k.idx;
        t["exponents"] = k.exp;
        t["coeff"] = q_str(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out.dump(2) + "\n";
}

PolyTensor tensor_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw precondition_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("root", "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key != "format" && key != "D" && key != "degree" && key != "terms")
            bad(key, "unknown field");
    }
    // a missing format field means version 1
    if (j.contains("format") && get_int(j["format"], "format", 1, 1) != 1)
        bad("format", "unsupported version");
    if (!j.contains("D")) bad("D", "missing");
    const int D = static_cast<int>(get_int(j["D"], "D", 1, 255));
    if (!j.contains("degree")) bad("degree", "missing");
    const int degree = static_cast<int>(get_int(j["degree"], "degree", 0, 64));

    PolyTensor T(D, degree);
    if (!j.contains("terms")) bad("terms", "missing");
    const ordered_json& terms = j["terms"];
    if (!terms.is_array()) bad("terms", "expected an array");
    for (size_t i = 0; i < terms.size(); ++i) {
        const std::string base = "terms[" + std::to_string(i) + "]";
        const ordered_json& t = terms[i];
        if (!t.is_object()) bad(base, "expected an object");
        for (auto it = t.begin(); it != t.end(); ++it)
            if (it.key() != "indices" && it.key() != "exponents" && it.key() != "coeff")
                bad(base + "." + it.key(), "unknown field");

        if (!t.contains("indices") || !t["indices"].is_array())
            bad(base + ".indices", "expected an array");
        if (static_cast<int>(t["indices"].size()) != degree)
            bad(base + ".indices", "expected length " + std::to_string(degree));
        Tuple idx(static_cast<size_t>(degree));
        for (int s = 0; s < degree; ++s)
            idx[static_cast<size_t>(s)] = static_cast<uint8_t>(
                get_int(t["indices"][static_cast<size_t>(s)],
                        base + ".indices[" + std::to_string(s) + "]", 0, D - 1));

        if (!t.contains("exponents") || !t["exponents"].is_array())
            bad(base + ".exponents", "expected an array");
        if (static_cast<int>(t["exponents"].size()) != D)
            bad(base + ".exponents", "expected length " + std::to_string(D));
        Expo exp(static_cast<size_t>(D));
        for (int s = 0; s < D; ++s)
            exp[static_cast<size_t>(s)] = static_cast<uint16_t>(
                get_int(t["exponents"][static_cast<size_t>(s)],
                        base + ".exponents[" + std::to_string(s) + "]", 0, 60000));

        if (!t.contains("coeff") || !t["coeff"].is_string())
            bad(base + ".coeff", "expected a rational string");
        Q c;
        try {
            c = parse_q(t["coeff"].get<std::string>());
        } catch (const std::exception&) {
            bad(base + ".coeff", "expected a rational like \"-3/4\"");
        }
        T.add_term(idx, exp, c);
    }
    validate(T);
    return T;
}

PolyTensor load_tensor(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return tensor_from_json(buf.str());
    } catch (const precondition_error& e) {
        throw precondition_error(path + ": " + e.what());
    }
}

void store_tensor(const std::string& path, const PolyTensor& T) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw precondition_error("cannot open file for writing: " + path);
    out << tensor_to_json(T);
    if (!out) throw precondition_error("write failed: " + path);
}

}  // namespace ncx
