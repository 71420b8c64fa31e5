package zeta.mathkit;

public class CharFlow {
    public boolean isVowel(char c) {
        if (c == 'a' || c == 'e') {
            return true;
        }
        return false;
    }
}
