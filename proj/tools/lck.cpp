// Batch front end: conversions, irreducibility checks, socles, ladder
// decompositions, the ring oracle, q-characters and weak separation, with
// machine-readable output.
//
//   lck check --payload '{"m": [[-4,-1]], "n": [[-1,2]]}' --k 7
//   lck --batch requests.ndjson
//
// Exit codes: 0 computed decision, 2 invalid input, 3 unsupported instance.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "lck/json_io.hpp"

namespace {

struct Outcome {
    lck::json response;
    int code = 0;
};

Outcome safe_run(const lck::json& request) {
    Outcome out;
    try {
        out.response = lck::run_request(request);
    } catch (const lck::unsupported_error& e) {
        out.response = lck::json{{"error", e.what()}, {"code", 3}};
        out.code = 3;
    } catch (const std::exception& e) {
        out.response = lck::json{{"error", e.what()}, {"code", 2}};
        out.code = 2;
    }
    return out;
}

int run_batch(std::istream& in, const std::string& format) {
    std::vector<lck::json> requests;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            requests.push_back(lck::json::parse(line));
        } catch (const std::exception& e) {
            requests.push_back(lck::json{{"_parse_error", e.what()}});
        }
    }
    std::vector<Outcome> outcomes(requests.size());
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(requests.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < requests.size(); ++i) outcomes[i] = safe_run(requests[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < requests.size(); i = next++) {
                    if (requests[i].contains("_parse_error")) {
                        outcomes[i] = {lck::json{{"error", requests[i]["_parse_error"]},
                                                 {"code", 2}},
                                       2};
                    } else {
                        outcomes[i] = safe_run(requests[i]);
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    int code = 0;
    for (const Outcome& o : outcomes) {
        if (format == "text") {
            std::cout << lck::render_text(o.response) << "\n";
        } else {
            std::cout << o.response.dump() << "\n";
        }
        code = std::max(code, o.code);
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact irreducibility checks for tensor products of snake modules"};
    app.name("lck");

    std::string command, payload_text, batch_path, format = "json";
    int k = 0, n = 0, budget = 9;
    bool have_k = false, have_n = false;

    app.add_option("command", command,
                   "one of: convert, check, socle, decompose, oracle, qchar, wsep");
    app.add_option("--payload", payload_text, "JSON payload (default: read from stdin)");
    app.add_option("--batch", batch_path, "process newline-delimited JSON requests (- = stdin)");
    app.add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--k", k, "quotient parameter k")->trigger_on_parse();
    app.add_option("--n", n, "tableau alphabet size n");
    app.add_option("--budget", budget, "enumeration cap for decompose");

    CLI11_PARSE(app, argc, argv);
    have_k = app.count("--k") > 0;
    have_n = app.count("--n") > 0;

    if (!batch_path.empty()) {
        if (batch_path == "-") return run_batch(std::cin, format);
        std::ifstream file(batch_path);
        if (!file) {
            std::cerr << "cannot open batch file: " << batch_path << "\n";
            return 2;
        }
        return run_batch(file, format);
    }

    if (command.empty()) {
        std::cerr << "no command given (see --help)\n";
        return 2;
    }
    lck::json request;
    try {
        if (payload_text.empty()) {
            std::stringstream buffer;
            buffer << std::cin.rdbuf();
            payload_text = buffer.str();
            if (payload_text.find_first_not_of(" \t\r\n") == std::string::npos) {
                payload_text = "{}";
            }
        }
        request["command"] = command;
        request["payload"] = lck::json::parse(payload_text);
        if (have_k) request["k"] = k;
        if (have_n) request["n"] = n;
        request["budget"] = budget;
    } catch (const std::exception& e) {
        std::cerr << "invalid payload: " << e.what() << "\n";
        return 2;
    }

    Outcome out = safe_run(request);
    if (format == "text") {
        std::cout << lck::render_text(out.response);
    } else {
        std::cout << out.response.dump(2) << "\n";
    }
    return out.code;
}
