package zeta.mathkit;

public class Dup {
    public int f(int a) {
        if (a > 0) {
            return a;
        }
        return 0;
    }

    public int f(int a, int b) {
        return a + b;
    }
}
