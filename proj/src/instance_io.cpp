#include "pktsched/instance_io.hpp"

#include "pktsched/errors.hpp"
#include "pktsched/format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pktsched {

namespace {

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_field(std::string_view text, std::size_t line, const char* name) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError(line, std::string("bad ") + name + " '" + std::string(text) + "'");
    return value;
}

} // namespace

Instance read_instance_csv(std::istream& in) {
    std::optional<Slot> horizon;
    bool header_seen = false;
    std::vector<Job> jobs;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr std::string_view key = "horizon=";
            const std::string_view body = trim(line.substr(1));
            if (body.starts_with(key)) {
                if (header_seen) throw ParseError(line_no, "horizon comment must precede the header");
                horizon = parse_field<Slot>(trim(body.substr(key.size())), line_no, "horizon");
            }
            continue;
        }
        if (!header_seen) {
            if (line != "id,release,deadline,weight")
                throw ParseError(line_no, "expected header 'id,release,deadline,weight'");
            header_seen = true;
            continue;
        }
        const auto fields = split_commas(line);
        if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
        Job job;
        job.id = JobId{parse_field<std::uint64_t>(fields[0], line_no, "id")};
        job.release = parse_field<Slot>(fields[1], line_no, "release");
        job.deadline = parse_field<Slot>(fields[2], line_no, "deadline");
        job.weight = parse_field<double>(fields[3], line_no, "weight");
        jobs.push_back(job);
    }
    if (!header_seen) throw ParseError(line_no, "missing header");
    return Instance(std::move(jobs), horizon);
}

Instance read_instance_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return read_instance_csv(in);
}

void write_instance_csv(std::ostream& out, const Instance& instance) {
    out << "# horizon=" << instance.horizon() << '\n';
    out << "id,release,deadline,weight\n";
    for (const Job& job : instance.jobs())
        out << job.id.value << ',' << job.release << ',' << job.deadline << ',' << format_number(job.weight) << '\n';
}

void write_instance_csv(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write_instance_csv(out, instance);
}

} // namespace pktsched
