#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace orlicz {

namespace {

void dump_value(const ojson& j, std::string& out, int indent) {
    const std::string pad(indent, ' ');
    const std::string pad2(indent + 2, ' ');
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad2 + ojson(it.key()).dump() + ": ";
                dump_value(it.value(), out, indent + 2);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad2;
                dump_value(v, out, indent + 2);
            }
            out += "\n" + pad + "]";
            return;
        }
        case ojson::value_t::number_float: {
            const double v = j.get<double>();
            if (std::isnan(v)) {
                out += "null";
            } else if (std::isinf(v)) {
                out += v > 0 ? "1e999" : "-1e999";  // out-of-range literal reads back as inf
            } else {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", v);
                out += buf;
            }
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_stable(const ojson& j) {
    std::string out;
    dump_value(j, out, 0);
    out += "\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write to '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::string Report::json() const {
    ojson full = body;
    full["exit_status"] = exit_status;
    return dump_stable(full);
}

void Report::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    write_file_atomic((std::filesystem::path(dir) / "report.json").string(), json());
    for (const Artifact& a : artifacts)
        write_file_atomic((std::filesystem::path(dir) / a.name).string(), a.content);
}

}  // namespace orlicz
