class IfElse {
    int pick(int a, int b) {
        if (a > b) {
            return a;
        } else {
            if (b > 0) {
                return b;
            }
        }
        return 0;
    }
}
