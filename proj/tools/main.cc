// Copyright 2026 The eaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <stop_token>
#include <thread>

#include "cli.h"

namespace {

std::atomic<bool> interrupted{false};

extern "C" void on_sigint(int) {
    interrupted.store(true);
}

}  // namespace

int main(int argc, char **argv) {
    std::signal(SIGINT, on_sigint);
    std::stop_source source;
    std::jthread watcher([&source](std::stop_token done) {
        while (!done.stop_requested()) {
            if (interrupted.load()) {
                source.request_stop();
                return;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
        }
    });
    const std::vector<std::string> args(argv + 1, argv + argc);
    return eaqec::cli::run(args, std::cout, std::cerr, source.get_token());
}
