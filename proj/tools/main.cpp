#include <iostream>

int main() {
    std::cout << "gencover (under construction)\n";
    return 0;
}
