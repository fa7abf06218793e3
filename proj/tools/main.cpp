#include <cstdio>

int main() {
    std::puts("sigmacurve: command-line interface not wired up yet");
    return 2;
}
