# SPDX-License-Identifier: Apache-2.0
def pytest_addoption(parser):
    parser.addoption("--binary", action="store", default="build/tools/discordant")
