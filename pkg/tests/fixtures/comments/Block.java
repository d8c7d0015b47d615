package comments;
/*
 * Block comment spanning lines two to four.
 */
public class Block {
    public void noop() {
    }
}
