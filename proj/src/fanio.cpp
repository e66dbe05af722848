#include "syzrank/fanio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace syzrank {
namespace {

std::string strip_comments(const std::string& text) {
    std::string out;
    bool skip = false;
    for (char c : text) {
        if (c == '#') skip = true;
        if (c == '\n') skip = false;
        if (!skip) out += c;
    }
    return out;
}

// Splits "key: ..." sections keyed by the known field names.
std::string section(const std::string& text, const std::string& key) {
    std::size_t at = text.find(key + ":");
    if (at == std::string::npos)
        throw std::invalid_argument("fan file: missing field '" + key + "'");
    std::size_t from = at + key.size() + 1;
    std::size_t end = text.size();
    for (const char* other : {"rays", "cones", "complete"}) {
        if (key == other) continue;
        std::size_t o = text.find(std::string(other) + ":", from);
        if (o != std::string::npos && o < end) end = o;
    }
    return text.substr(from, end - from);
}

std::vector<std::vector<long>> parse_groups(const std::string& body, char open, char close,
                                            const std::string& what) {
    std::vector<std::vector<long>> out;
    std::size_t i = 0;
    while (i < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[i]))) {
            ++i;
            continue;
        }
        if (body[i] != open)
            throw std::invalid_argument("fan file: expected '" + std::string(1, open) + "' in " +
                                        what);
        std::size_t term = body.find(close, i);
        if (term == std::string::npos)
            throw std::invalid_argument("fan file: unterminated group in " + what);
        std::string inner = body.substr(i + 1, term - i - 1);
        for (char& c : inner)
            if (c == ',') c = ' ';
        std::istringstream in(inner);
        std::vector<long> v;
        long x;
        while (in >> x) v.push_back(x);
        if (!in.eof())
            throw std::invalid_argument("fan file: bad integer in " + what);
        if (v.empty()) throw std::invalid_argument("fan file: empty group in " + what);
        out.push_back(std::move(v));
        i = term + 1;
    }
    if (out.empty()) throw std::invalid_argument("fan file: no entries in " + what);
    return out;
}

}  // namespace

Fan parse_fan_text(const std::string& text) {
    std::string clean = strip_comments(text);
    Fan fan;
    fan.rays = parse_groups(section(clean, "rays"), '(', ')', "rays");
    for (const auto& c : parse_groups(section(clean, "cones"), '{', '}', "cones")) {
        std::vector<std::size_t> cone;
        for (long v : c) {
            if (v < 0) throw std::invalid_argument("fan file: negative cone index");
            cone.push_back(static_cast<std::size_t>(v));
        }
        fan.max_cones.push_back(std::move(cone));
    }
    std::istringstream in(section(clean, "complete"));
    std::string word;
    in >> word;
    if (word == "true")
        fan.asserted_complete = true;
    else if (word == "false")
        fan.asserted_complete = false;
    else
        throw std::invalid_argument("fan file: 'complete' must be true or false");
    return fan;
}

Fan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fan file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fan_text(buf.str());
}

}  // namespace syzrank
