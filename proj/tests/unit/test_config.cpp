/*
   Copyright 2026 The idealpack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <sstream>

#include "idealpack/config.hpp"

using namespace idealpack;

namespace {

std::map<std::string, std::string> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "inline");
}

std::optional<ErrorKind> kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::optional<ErrorKind>{};
}

}  // namespace

TEST(Config, DefaultsAreTheQuarticExample) {
    RunConfig c = merge_config({}, {});
    EXPECT_EQ(c.poly, (std::vector<Integer>{1, 1, -1, -1, 1}));
    EXPECT_EQ(c.prime, 3);
    EXPECT_EQ(c.effective_lmax(), 200u);
    EXPECT_FALSE(code_length(c).has_value());
    validate(c);
}

TEST(Config, CommandLineBeatsFileBeatsDefaults) {
    auto file = parse("# sample\nprime = 7\nn = 64   # trailing\nlll-delta = 0.75\nformat = kv\n");
    RunConfig c = merge_config(file, {{"prime", "5"}, {"lmax", "50"}});
    EXPECT_EQ(c.prime, 5);
    EXPECT_EQ(*c.n, 64u);
    EXPECT_EQ(c.lll_delta, 0.75);
    EXPECT_EQ(c.lmax, 50u);
    EXPECT_EQ(c.format, OutputFormat::Kv);
    RunConfig d = merge_config(file, {});
    EXPECT_EQ(d.prime, 7);
}

TEST(Config, DimSetsLength) {
    RunConfig c = merge_config({}, {{"dim", "256"}});
    EXPECT_EQ(*code_length(c), 64u);
    validate(c);
    c = merge_config({}, {{"dim", "255"}});
    EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::InvalidArgument);
    c = merge_config({}, {{"dim", "256"}, {"n", "63"}});
    EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::InvalidArgument);
}

TEST(Config, DeepOverridesLmax) {
    RunConfig c = merge_config({}, {{"lmax", "5"}, {"deep", "true"}});
    EXPECT_EQ(c.effective_lmax(), 1000u);
    validate(c);
    c = merge_config({}, {{"lmax", "5"}});
    EXPECT_EQ(kind_of([&] { validate(c); }), ErrorKind::InvalidArgument);
}

TEST(Config, ParseErrors) {
    EXPECT_EQ(kind_of([] { parse("prime 3\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse(" = 3\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { merge_config({{"colour", "blue"}}, {}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { merge_config({}, {{"n", "-4"}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { merge_config({}, {{"poly", "1,x,1"}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { merge_config({}, {{"lll_delta", "0.9z"}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { merge_config({}, {{"format", "json"}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { merge_config({}, {{"deep", "maybe"}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { parse_config_file("/nonexistent/idealpack.conf"); }), ErrorKind::InvalidArgument);
}

TEST(Config, Validation) {
    auto bad = [](std::vector<std::pair<std::string, std::string>> kv) {
        return kind_of([&] { validate(merge_config({}, kv)); });
    };
    EXPECT_EQ(bad({{"poly", "1,1,2"}}), ErrorKind::NotMonic);
    EXPECT_EQ(bad({{"poly", "1,1"}}), ErrorKind::InvalidArgument);
    EXPECT_EQ(bad({{"prime", "1"}}), ErrorKind::InvalidArgument);
    EXPECT_EQ(bad({{"lll_delta", "0.2"}}), ErrorKind::InvalidArgument);
    EXPECT_EQ(bad({{"precision_bits", "32"}}), ErrorKind::InvalidArgument);
    EXPECT_EQ(bad({{"lmax", "200000"}}), ErrorKind::ScaleTooLarge);
}
