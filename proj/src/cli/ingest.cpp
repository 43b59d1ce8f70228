#include "glue/cli/ingest.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "glue/errors.hpp"

namespace glue {

namespace {

using json = nlohmann::json;
using Problems = std::vector<std::pair<std::size_t, std::string>>;

Integer to_integer(const json& j, const char* what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    throw std::runtime_error(std::string(what) + ": expected an integer");
}

std::vector<Integer> to_integers(const json& j, const char* what) {
    if (!j.is_array()) throw std::runtime_error(std::string(what) + ": expected an array");
    std::vector<Integer> v;
    for (auto& x : j) v.push_back(to_integer(x, what));
    return v;
}

// bare integer literals too long for int64 would come back as doubles;
// quote them so they reach to_integer exactly
std::string quote_long_integers(const std::string& line) {
    std::string out;
    out.reserve(line.size() + 8);
    bool in_string = false;
    for (std::size_t i = 0; i < line.size();) {
        char c = line[i];
        if (in_string) {
            out += c;
            if (c == '\\' && i + 1 < line.size()) out += line[++i];
            else if (c == '"') in_string = false;
            ++i;
            continue;
        }
        if (c == '"') {
            in_string = true;
            out += c;
            ++i;
            continue;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::size_t j = i + (c == '-');
            while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
            bool plain = j == line.size() || (line[j] != '.' && line[j] != 'e' && line[j] != 'E');
            if (plain && j - i > 18) {
                out += '"' + line.substr(i, j - i) + '"';
            } else {
                out += line.substr(i, j - i);
            }
            i = j;
            continue;
        }
        out += c;
        ++i;
    }
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::runtime_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T, class Build>
std::vector<T> read_lines(std::istream& in, const char* kind, Build build) {
    std::vector<T> out;
    Problems bad;
    std::set<std::string> seen;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            json j = json::parse(quote_long_integers(line));
            T c = build(j);
            if (!seen.insert(c.label).second) throw std::runtime_error("duplicate label " + c.label);
            out.push_back(std::move(c));
        } catch (const json::exception& e) {
            bad.emplace_back(no, std::string("malformed JSON: ") + e.what());
        } catch (const std::exception& e) {
            bad.emplace_back(no, e.what());
        }
    }
    if (!bad.empty()) {
        std::string msg = std::string(kind) + " input: " + std::to_string(bad.size()) + " bad line(s):";
        for (auto& [n, why] : bad) msg += "\n  line " + std::to_string(n) + ": " + why;
        throw parse_error(msg, std::move(bad));
    }
    return out;
}

std::ifstream open(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path, {{0, "cannot open " + path}});
    return f;
}

}  // namespace

std::vector<GenusTwoCurve> read_genus2(std::istream& in) {
    return read_lines<GenusTwoCurve>(in, "genus-2", [](const json& j) {
        auto label = field(j, "label").get<std::string>();
        auto f = to_integers(field(j, "f"), "f");
        auto h = j.contains("h") ? to_integers(j.at("h"), "h") : std::vector<Integer>{};
        if (f.size() > 7) throw std::runtime_error("f: more than 7 coefficients");
        if (h.size() > 4) throw std::runtime_error("h: more than 4 coefficients");
        return GenusTwoCurve(label, IntPoly(f), IntPoly(h), to_integer(field(j, "conductor"), "conductor"));
    });
}

std::vector<EllipticCurve> read_elliptic(std::istream& in) {
    return read_lines<EllipticCurve>(in, "elliptic", [](const json& j) {
        auto label = field(j, "label").get<std::string>();
        auto a = to_integers(field(j, "ainvs"), "ainvs");
        if (a.size() != 5) throw std::runtime_error("ainvs: expected 5 integers, got " + std::to_string(a.size()));
        std::optional<Integer> dmin;
        if (j.contains("disc_min") && !j.at("disc_min").is_null()) dmin = to_integer(j.at("disc_min"), "disc_min");
        return EllipticCurve(label, {a[0], a[1], a[2], a[3], a[4]}, to_integer(field(j, "conductor"), "conductor"), dmin);
    });
}

std::vector<GenusTwoCurve> ingest_genus2(const std::string& path) {
    auto f = open(path);
    return read_genus2(f);
}

std::vector<EllipticCurve> ingest_elliptic(const std::string& path) {
    auto f = open(path);
    return read_elliptic(f);
}

}  // namespace glue
