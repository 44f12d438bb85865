#pragma once

// Small TOML subset reader: [sections], key = value with strings, numbers,
// booleans, and flat arrays. Enough for the shipped experiment configs.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpm::toml {

struct Value {
    std::string str;
    std::vector<std::string> items;  // raw array elements
    bool is_array = false;
};

class Table {
  public:
    bool has(const std::string& key) const { return vals_.count(key) != 0; }

    std::string get_str(const std::string& key, const std::string& dflt = {}) const {
        auto it = vals_.find(key);
        return it == vals_.end() ? dflt : it->second.str;
    }

    double get_num(const std::string& key, double dflt) const {
        auto it = vals_.find(key);
        return it == vals_.end() ? dflt : parse_num(it->second.str, key);
    }

    bool get_bool(const std::string& key, bool dflt) const {
        auto it = vals_.find(key);
        if (it == vals_.end()) return dflt;
        if (it->second.str == "true") return true;
        if (it->second.str == "false") return false;
        throw std::runtime_error("config: bad boolean for " + key);
    }

    std::vector<double> get_nums(const std::string& key) const {
        std::vector<double> out;
        auto it = vals_.find(key);
        if (it == vals_.end()) return out;
        for (const auto& s : it->second.items) out.push_back(parse_num(s, key));
        return out;
    }

    std::vector<std::string> get_strs(const std::string& key) const {
        auto it = vals_.find(key);
        return it == vals_.end() ? std::vector<std::string>{} : it->second.items;
    }

    void set(const std::string& key, Value v) { vals_[key] = std::move(v); }

  private:
    static double parse_num(const std::string& s, const std::string& key) {
        try {
            std::size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::runtime_error("config: bad number for " + key + ": " + s);
        }
    }

    std::map<std::string, Value> vals_;
};

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

inline Table load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    Table t;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config: bad section at line " +
                                         std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: expected key = value at line " +
                                     std::to_string(lineno));
        const std::string key =
            (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
        std::string rhs = trim(line.substr(eq + 1));
        Value v;
        if (!rhs.empty() && rhs.front() == '[') {
            if (rhs.back() != ']')
                throw std::runtime_error("config: unterminated array at line " +
                                         std::to_string(lineno));
            v.is_array = true;
            std::stringstream ss(rhs.substr(1, rhs.size() - 2));
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (!item.empty()) v.items.push_back(unquote(item));
            }
        } else {
            v.str = unquote(rhs);
        }
        t.set(key, std::move(v));
    }
    return t;
}

}  // namespace dpm::toml
